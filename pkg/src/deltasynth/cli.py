"""Command-line surface: synthesize, verify, generate, benchmark, tables.

Matrix files use the square-root form (a + b*sqrt(2) + i*(c + d*sqrt(2))) /
sqrt(2)^m per entry, which is how such matrices are usually stated; they are
converted exactly to the internal delta-denominator form on load.  Circuit
files are the text format of the circuits module, so everything this tool
writes it can also read back and re-check.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from .circuits import (
    Circuit,
    Gate,
    circuit_to_matrix,
    emit,
    gate_counts,
    parse_circuit,
    render_circuit,
)
from .engine import Decomposition, synthesize, verify_decomposition
from .errors import (
    CircuitParseError,
    InvariantError,
    MatrixParseError,
    NotUnitaryError,
    UnsupportedDimError,
    VerificationError,
)
from .linalg import ExactMatrix, is_unitary
from .oracle import InstanceSpec, draw_circuit
from .ring import (
    D_ONE,
    D_ZERO,
    OMEGA_POWERS,
    ZOmega,
    ZW_ONE,
    ZW_ZERO,
    from_sqrt2_form,
    residue,
    to_sqrt2_form,
)

_TOKEN = re.compile(r"\S+")


def _parse_entry(token: str, line: int, column: int):
    if token == "0":
        return D_ZERO
    if token == "1":
        return D_ONE
    body, slash, tail = token.partition("/")
    parts = body.split(",")
    if len(parts) != 4:
        raise MatrixParseError(
            f"entry must be a,b,c,d/m or 0 or 1, got {token!r}", line, column)
    try:
        a, b, c, d = (int(p) for p in parts)
        m = int(tail) if slash else 0
    except ValueError:
        raise MatrixParseError(
            f"entry must use integers, got {token!r}", line, column) from None
    if m < 0:
        raise MatrixParseError(
            f"denominator exponent must be >= 0, got {token!r}", line, column)
    return from_sqrt2_form(a, b, c, d, m)


def parse_matrix(text: str) -> ExactMatrix:
    """Matrix file: `dim n` header, then n rows of n entries; # starts a comment."""
    dim = 0
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = _TOKEN.finditer(line)
        first = next(tokens, None)
        if first is None:
            continue
        if dim == 0:
            second = next(tokens, None)
            if first.group() != "dim" or second is None or next(tokens, None):
                raise MatrixParseError(
                    "expected header 'dim n'", lineno, first.start() + 1)
            try:
                dim = int(second.group())
            except ValueError:
                raise MatrixParseError(
                    f"bad dimension {second.group()!r}",
                    lineno, second.start() + 1) from None
            if not 1 <= dim <= 4:
                raise MatrixParseError(
                    f"dimension must be 1..4, got {dim}",
                    lineno, second.start() + 1)
            continue
        if len(rows) == dim:
            raise MatrixParseError(
                "content after last matrix row", lineno, first.start() + 1)
        entries = []
        for match in [first, *tokens]:
            entries.append(_parse_entry(match.group(), lineno, match.start() + 1))
        if len(entries) != dim:
            raise MatrixParseError(
                f"expected {dim} entries per row, got {len(entries)}", lineno, 1)
        rows.append(entries)
    if dim == 0:
        raise MatrixParseError("empty matrix file")
    if len(rows) != dim:
        raise MatrixParseError(f"expected {dim} rows, got {len(rows)}")
    return ExactMatrix(rows)


def format_entry(value) -> str:
    a, b, c, d, m = to_sqrt2_form(value)
    if m == 0 and (b, c, d) == (0, 0, 0) and a in (0, 1):
        return str(a)
    return f"{a},{b},{c},{d}/{m}"


def render_matrix(m: ExactMatrix, comments: Sequence[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"dim {m.dim}")
    lines.extend(" ".join(format_entry(e) for e in row) for row in m.rows)
    return "\n".join(lines) + "\n"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_unitary(path: str) -> ExactMatrix:
    matrix = parse_matrix(_read_text(path))
    if not is_unitary(matrix):
        raise NotUnitaryError(f"matrix in {path} is not unitary")
    return matrix


def _scalar_identity(scalar) -> ExactMatrix:
    return ExactMatrix([[scalar, D_ZERO], [D_ZERO, scalar]])


def _global_phase_circuit(dec: Decomposition) -> Circuit:
    power = 0
    for op in dec.word:
        power = (power + op.power) % 8
    gates = (Gate("W", (), power),) if power else ()
    return Circuit(1, False, gates)


def cmd_synth(args: argparse.Namespace) -> int:
    matrix = _load_unitary(args.input)
    if args.debug:
        for i, row in enumerate(matrix.rows):
            internal = "  ".join(str(e) for e in row)
            print(f"debug: row {i + 1}: {internal}", file=sys.stderr)
    dec = synthesize(matrix, debug=args.debug)
    if args.verify and not verify_decomposition(matrix, dec):
        raise VerificationError("elementary word does not reproduce the input")
    lines = [
        f"# dim {dec.dim}",
        f"# k {dec.source_k}",
        f"# rounds {len(dec.rounds)}",
        f"# word-length {len(dec.word)}",
    ]
    if args.debug:
        for i, rnd in enumerate(dec.rounds, 1):
            chain = ",".join(rnd.case_chain)
            print(f"debug: round {i}: k {rnd.k_before} -> {rnd.k_after}"
                  f" via {chain} ({rnd.hadamard_count} mixing ops)",
                  file=sys.stderr)
    if args.elementary or dec.dim == 3:
        word = " ".join(str(op) for op in dec.word)
        lines.append(f"# word: {word if word else 'I'}")
    circuit = None
    if dec.dim == 1:
        circuit = _global_phase_circuit(dec)
        lines.append("# note: 1x1 input; circuit is the global phase on one idle qubit")
    elif dec.dim != 3:
        circuit = emit(dec.word, dec.dim)
    else:
        lines.append("# note: dimension 3 has no circuit form; word only")
    if circuit is not None:
        counts = gate_counts(circuit)
        lines.append(f"# gates {counts['total']}")
        lines.append(f"# t-count {counts['t_count']}")
        lines.append(f"# ancilla {'yes' if counts['uses_ancilla'] else 'no'}")
        if args.verify:
            expected = (_scalar_identity(matrix.entry(0, 0))
                        if dec.dim == 1 else matrix)
            if circuit_to_matrix(circuit) != expected:
                raise VerificationError("circuit does not reproduce the input")
    if args.verify:
        lines.append("# verified exact")
    body = render_circuit(circuit) if circuit is not None else ""
    _write_text(args.out, "\n".join(lines) + "\n" + body)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(args.qubits, args.budget, args.seed)
    circuit = draw_circuit(spec)
    matrix = circuit_to_matrix(circuit)
    word = "; ".join(str(g) for g in circuit.gates)
    text = render_matrix(matrix, comments=[
        f"generated by: qubits={args.qubits} budget={args.budget} seed={args.seed}",
        f"gate word: {word if word else '(empty)'}",
    ])
    _write_text(args.out, text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    matrix = _load_unitary(args.matrix)
    if matrix.dim == 3:
        raise UnsupportedDimError("dimension 3 has no circuit form to verify")
    circuit = parse_circuit(_read_text(args.circuit))
    expected = _scalar_identity(matrix.entry(0, 0)) if matrix.dim == 1 else matrix
    try:
        actual = circuit_to_matrix(circuit)
    except VerificationError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 1
    if actual.dim != expected.dim:
        print(f"mismatch: circuit acts on dimension {actual.dim}, "
              f"matrix has dimension {expected.dim}", file=sys.stderr)
        return 1
    if actual != expected:
        print("mismatch: circuit does not equal the matrix", file=sys.stderr)
        return 1
    print("exact match")
    return 0


def _stats(xs: Sequence[int]) -> str:
    return f"{sum(xs) / len(xs):.1f} {max(xs)}"


def cmd_bench(args: argparse.Namespace) -> int:
    dim = 2 ** args.qubits
    print(f"# qubits {args.qubits} trials {args.trials} seed {args.seed}")
    print("budget k_mean k_max word_mean word_max"
          " gates_mean gates_max t_mean t_max")
    for budget in args.budgets:
        ks, words, gates, tees = [], [], [], []
        for trial in range(args.trials):
            spec = InstanceSpec(args.qubits, budget, args.seed + trial)
            matrix = circuit_to_matrix(draw_circuit(spec))
            dec = synthesize(matrix)
            counts = gate_counts(emit(dec.word, dim))
            ks.append(dec.source_k)
            words.append(len(dec.word))
            gates.append(counts["total"])
            tees.append(counts["t_count"])
        print(f"{budget} {_stats(ks)} {_stats(words)}"
              f" {_stats(gates)} {_stats(tees)}")
    return 0


def _power_name(p: int) -> str:
    if p == 0:
        return "1"
    return "w" if p == 1 else f"w^{p}"


def _named_representatives() -> list[tuple[str, ZOmega]]:
    named = [("0", ZW_ZERO)]
    named += [(_power_name(p), OMEGA_POWERS[p]) for p in range(4)]
    named += [(f"1+{_power_name(p)}", ZW_ONE + OMEGA_POWERS[p]) for p in range(1, 4)]
    return named


def residue_tables() -> str:
    """Quotient rings Z[w]/(delta^n) and the bit-basis table, all computed."""
    lines = []
    names = {}
    for n in (1, 2, 3):
        classes = {}
        for name, z in _named_representatives():
            classes.setdefault(residue(z, n), name)
        if len(classes) != 2 ** n:
            raise VerificationError(f"expected {2 ** n} classes mod delta^{n}")
        power = "" if n == 1 else f"^{n}"
        lines.append(f"Z[w]/(delta{power}): {2 ** n} elements")
        lines.extend(f"  {name}" for name in classes.values())
        lines.append("")
        names = classes
    lines.append("basis {1, delta, delta^2} decomposition mod delta^3:")
    by_bits = {cls.bits: name for cls, name in names.items()}
    for bits in sorted(by_bits, key=lambda b: (b[0], b[1] + 2 * b[2])):
        name = by_bits[bits]
        lines.append(f"  {name:<6} -> {bits[0]} + {bits[1]}*delta"
                     f" + {bits[2]}*delta^2")
    return "\n".join(lines) + "\n"


def cmd_tables(args: argparse.Namespace) -> int:
    sys.stdout.write(residue_tables())
    return 0


def _budget_list(text: str) -> list[int]:
    try:
        budgets = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad budget list {text!r}") from None
    if not budgets or any(b < 0 for b in budgets):
        raise argparse.ArgumentTypeError(f"bad budget list {text!r}")
    return budgets


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltasynth",
        description="Exact Clifford+T synthesis for unitaries over D[w].")
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="synthesize a circuit from a matrix file")
    synth.add_argument("input", help="matrix file, or - for standard input")
    synth.add_argument("--out", help="write the circuit here instead of stdout")
    synth.add_argument("--elementary", action="store_true",
                       help="include the elementary-operator word")
    synth.add_argument("--verify", action="store_true",
                       help="re-check the word and circuit exactly")
    synth.add_argument("--debug", action="store_true",
                       help="log internal form and per-round progress")
    synth.set_defaults(func=cmd_synth)

    gen = sub.add_parser("gen", help="generate a random unitary matrix file")
    gen.add_argument("--qubits", type=int, choices=(1, 2), required=True)
    gen.add_argument("--budget", type=_nonneg, required=True,
                     help="number of gates in the generating word")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", help="write the matrix here instead of stdout")
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="gate-count scaling over random instances")
    bench.add_argument("--qubits", type=int, choices=(1, 2), default=2)
    bench.add_argument("--budgets", type=_budget_list, default=[10, 20, 40],
                       help="comma-separated gate budgets")
    bench.add_argument("--trials", type=_positive, default=10)
    bench.add_argument("--seed", type=int, required=True)
    bench.set_defaults(func=cmd_bench)

    tables = sub.add_parser("tables", help="print the residue tables")
    tables.set_defaults(func=cmd_tables)

    verify = sub.add_parser("verify", help="check a circuit file against a matrix file")
    verify.add_argument("matrix")
    verify.add_argument("circuit")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixParseError, CircuitParseError, UnsupportedDimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotUnitaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
