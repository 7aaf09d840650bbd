"""Lowering elementary-operator words to Clifford+T circuits.

A word over row operations on dimension 2 or 4 becomes a circuit on 1 or 2
qubits (wire 0 is the most significant basis bit).  Two-level Hadamard and
swap operations lower to controlled gates, routed through a CNOT change of
basis when the two levels differ in both bits.  Single-level phases on two
qubits lower to controlled-S powers when the phase is a power of i; odd
powers of w borrow one ancilla, flip it on the targeted basis state, rotate
it with T gates, and flip it back, so the ancilla always returns to zero.

All gate templates are verified against their exact matrices once, the first
time a circuit is emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CircuitParseError,
    TemplateError,
    UnsupportedDimError,
    VerificationError,
)
from .linalg import ElementaryOp, ExactMatrix
from .ring import D_INV_SQRT2, D_ONE, D_ZERO, DOmega, OMEGA_POWERS

SINGLE_WIRE_GATES = frozenset({"H", "S", "SDG", "T", "TDG", "X"})
GATE_NAMES = SINGLE_WIRE_GATES | {"CNOT", "W", "ANC_INIT", "ANC_FREE"}

_DIAG_POWER = {"S": 2, "SDG": 6, "T": 1, "TDG": 7}

# w^p on one wire as a minimal T/S gate sequence
_PHASE_SEQ = {
    0: (),
    1: ("T",),
    2: ("S",),
    3: ("S", "T"),
    4: ("S", "S"),
    5: ("SDG", "TDG"),
    6: ("SDG",),
    7: ("TDG",),
}


@dataclass(frozen=True)
class Gate:
    """One circuit instruction; W is a global phase of w^power."""

    name: str
    wires: tuple[int, ...] = ()
    power: int = 0

    def __post_init__(self) -> None:
        if self.name not in GATE_NAMES:
            raise ValueError(f"unknown gate {self.name!r}")
        if self.name == "W":
            if self.wires or not 1 <= self.power <= 7:
                raise ValueError("W takes no wires and a power in 1..7")
        elif self.power:
            raise ValueError(f"{self.name} takes no power")
        elif self.name == "CNOT":
            if len(self.wires) != 2 or self.wires[0] == self.wires[1]:
                raise ValueError("CNOT takes two distinct wires")
        elif len(self.wires) != 1:
            raise ValueError(f"{self.name} takes exactly one wire")
        if any(w < 0 for w in self.wires):
            raise ValueError("wires are non-negative")

    def __str__(self) -> str:
        if self.name == "W":
            return f"W {self.power}"
        return " ".join([self.name, *map(str, self.wires)])


@dataclass(frozen=True)
class Circuit:
    data_qubits: int
    uses_ancilla: bool
    gates: tuple[Gate, ...]

    def __post_init__(self) -> None:
        if self.data_qubits not in (1, 2):
            raise ValueError("circuits cover 1 or 2 data qubits")
        bound = self.wire_count
        for gate in self.gates:
            if any(w >= bound for w in gate.wires):
                raise ValueError(f"gate {gate} exceeds {bound} wires")
            if gate.name in ("ANC_INIT", "ANC_FREE"):
                if not self.uses_ancilla or gate.wires != (self.data_qubits,):
                    raise ValueError("ancilla markers must name the ancilla wire")

    @property
    def wire_count(self) -> int:
        return self.data_qubits + (1 if self.uses_ancilla else 0)

    @property
    def dim(self) -> int:
        return 1 << self.data_qubits


def _wire_mask(wire: int, n_wires: int) -> int:
    return 1 << (n_wires - 1 - wire)


def _apply_gate(rows: list[list[DOmega]], gate: Gate, n_wires: int) -> None:
    size = len(rows)
    if gate.name == "W":
        for i in range(size):
            rows[i] = [e.mul_omega_power(gate.power) for e in rows[i]]
        return
    if gate.name in ("ANC_INIT", "ANC_FREE"):
        return
    if gate.name == "CNOT":
        cm = _wire_mask(gate.wires[0], n_wires)
        tm = _wire_mask(gate.wires[1], n_wires)
        for i in range(size):
            if i & cm and not i & tm:
                rows[i], rows[i | tm] = rows[i | tm], rows[i]
        return
    mask = _wire_mask(gate.wires[0], n_wires)
    if gate.name == "X":
        for i in range(size):
            if not i & mask:
                rows[i], rows[i | mask] = rows[i | mask], rows[i]
    elif gate.name == "H":
        for i in range(size):
            if not i & mask:
                lo, hi = rows[i], rows[i | mask]
                rows[i] = [(a + b) * D_INV_SQRT2 for a, b in zip(lo, hi)]
                rows[i | mask] = [(a - b) * D_INV_SQRT2 for a, b in zip(lo, hi)]
    else:
        power = _DIAG_POWER[gate.name]
        for i in range(size):
            if i & mask:
                rows[i] = [e.mul_omega_power(power) for e in rows[i]]


def _simulate(gates: Iterable[Gate], n_wires: int) -> list[list[DOmega]]:
    size = 1 << n_wires
    rows = [[D_ONE if i == j else D_ZERO for j in range(size)] for i in range(size)]
    for gate in gates:
        _apply_gate(rows, gate, n_wires)
    return rows


def _phase_gates(wire: int, power: int) -> list[Gate]:
    return [Gate(name, (wire,)) for name in _PHASE_SEQ[power % 8]]


def _lambda_s(c: int, t: int) -> list[Gate]:
    return [Gate("T", (c,)), Gate("T", (t,)), Gate("CNOT", (c, t)),
            Gate("TDG", (t,)), Gate("CNOT", (c, t))]


def _lambda_s_dag(c: int, t: int) -> list[Gate]:
    return [Gate("TDG", (c,)), Gate("TDG", (t,)), Gate("CNOT", (c, t)),
            Gate("T", (t,)), Gate("CNOT", (c, t))]


def _lambda_h(c: int, t: int) -> list[Gate]:
    return [Gate("SDG", (t,)), Gate("H", (t,)), Gate("TDG", (t,)),
            Gate("CNOT", (c, t)),
            Gate("T", (t,)), Gate("H", (t,)), Gate("S", (t,))]


def _toffoli(c1: int, c2: int, t: int) -> list[Gate]:
    return [Gate("H", (t,)),
            Gate("CNOT", (c2, t)), Gate("TDG", (t,)),
            Gate("CNOT", (c1, t)), Gate("T", (t,)),
            Gate("CNOT", (c2, t)), Gate("TDG", (t,)),
            Gate("CNOT", (c1, t)), Gate("T", (c2,)), Gate("T", (t,)),
            Gate("H", (t,)),
            Gate("CNOT", (c1, c2)), Gate("T", (c1,)), Gate("TDG", (c2,)),
            Gate("CNOT", (c1, c2))]


def _lambda2_ix(c1: int, c2: int, t: int) -> list[Gate]:
    return _lambda_s(c1, c2) + _toffoli(c1, c2, t)


def _lambda2_minus_ix(c1: int, c2: int, t: int) -> list[Gate]:
    return _lambda_s_dag(c1, c2) + _toffoli(c1, c2, t)


def _controlled_target_block(dim: int, pair: tuple[int, int],
                             block: Sequence[Sequence[DOmega]]) -> list[list[DOmega]]:
    rows = [[D_ONE if i == j else D_ZERO for j in range(dim)] for i in range(dim)]
    a, b = pair
    rows[a][a], rows[a][b] = block[0][0], block[0][1]
    rows[b][a], rows[b][b] = block[1][0], block[1][1]
    return rows


def _template_targets() -> list[tuple[str, list[Gate], list[list[DOmega]], int]]:
    s = DOmega(OMEGA_POWERS[2], 0)
    h = D_INV_SQRT2
    ix = DOmega(OMEGA_POWERS[2], 0)
    mix = DOmega(OMEGA_POWERS[6], 0)
    return [
        ("controlled-S", _lambda_s(0, 1),
         _controlled_target_block(4, (2, 3), [[D_ONE, D_ZERO], [D_ZERO, s]]), 2),
        ("controlled-Sdg", _lambda_s_dag(0, 1),
         _controlled_target_block(4, (2, 3), [[D_ONE, D_ZERO], [D_ZERO, mix]]), 2),
        ("controlled-H", _lambda_h(0, 1),
         _controlled_target_block(4, (2, 3), [[h, h], [h, -h]]), 2),
        ("toffoli", _toffoli(0, 1, 2),
         _controlled_target_block(8, (6, 7), [[D_ZERO, D_ONE], [D_ONE, D_ZERO]]), 3),
        ("doubly-controlled iX", _lambda2_ix(0, 1, 2),
         _controlled_target_block(8, (6, 7), [[D_ZERO, ix], [ix, D_ZERO]]), 3),
        ("doubly-controlled -iX", _lambda2_minus_ix(0, 1, 2),
         _controlled_target_block(8, (6, 7), [[D_ZERO, mix], [mix, D_ZERO]]), 3),
    ]


_templates_verified = False


def verify_templates() -> None:
    """Check every gate template against its exact matrix; raise on mismatch."""
    global _templates_verified
    for name, gates, target, n_wires in _template_targets():
        if _simulate(gates, n_wires) != target:
            raise TemplateError(f"{name} template does not match its matrix")
    _templates_verified = True


def _ensure_templates() -> None:
    if not _templates_verified:
        verify_templates()


def _lower_one_qubit(op: ElementaryOp) -> list[Gate]:
    if op.kind == "H":
        return [Gate("H", (0,))]
    if op.kind == "X":
        return [Gate("X", (0,))]
    power = op.power % 8
    if op.j == 2:
        return _phase_gates(0, power)
    return [Gate("W", (), power), *_phase_gates(0, (8 - power) % 8)]


def _conjugated(wrapper: list[Gate], inner: list[Gate]) -> list[Gate]:
    return wrapper + inner + wrapper


def _lower_two_level(kind: str, a: int, b: int) -> list[Gate]:
    diff = a ^ b
    if diff == 0b11:
        mapped = sorted((x ^ ((x >> 1) & 1) for x in (a, b)))
        return _conjugated([Gate("CNOT", (0, 1))],
                           _lower_two_level(kind, mapped[0], mapped[1]))
    if diff == 0b01:
        control, target, value = 0, 1, a >> 1
    else:
        control, target, value = 1, 0, a & 1
    inner = [Gate("CNOT", (control, target))] if kind == "X" else _lambda_h(control, target)
    if value == 0:
        return _conjugated([Gate("X", (control,))], inner)
    return inner


def _lower_two_qubit_phase(state: int, power: int) -> tuple[list[Gate], bool]:
    flips = [Gate("X", (w,)) for w, bit in enumerate((state >> 1 & 1, state & 1))
             if bit == 0]
    if power % 2 == 0:
        quarter = (power // 2) % 4
        if quarter == 0:
            return [], False
        body = _lambda_s_dag(0, 1) if quarter == 3 else _lambda_s(0, 1) * quarter
        return _conjugated(flips, body), False
    body = (_lambda2_ix(0, 1, 2) + _phase_gates(2, power)
            + _lambda2_minus_ix(0, 1, 2))
    return _conjugated(flips, body), True


def _lower_two_qubit(op: ElementaryOp) -> tuple[list[Gate], bool]:
    if op.kind == "omega":
        return _lower_two_qubit_phase(op.j - 1, op.power % 8)
    return _lower_two_level(op.kind, op.j - 1, op.m - 1), False


def emit(word: Sequence[ElementaryOp], dim: int) -> Circuit:
    """Clifford+T circuit whose unitary equals the product of the word.

    Gates are listed in application order, so the word's rightmost factor
    lowers first.  Only dimensions 2 and 4 have a qubit layout.
    """
    if dim not in (2, 4):
        raise UnsupportedDimError(f"no qubit layout for dimension {dim}")
    _ensure_templates()
    qubits = 1 if dim == 2 else 2
    body: list[Gate] = []
    uses_ancilla = False
    for op in reversed(word):
        top = max(op.j, op.m)
        if top > dim:
            raise ValueError(f"operator {op} exceeds dimension {dim}")
        if qubits == 1:
            body.extend(_lower_one_qubit(op))
        else:
            gates, used = _lower_two_qubit(op)
            body.extend(gates)
            uses_ancilla = uses_ancilla or used
    if uses_ancilla:
        body = [Gate("ANC_INIT", (qubits,)), *body, Gate("ANC_FREE", (qubits,))]
    return Circuit(qubits, uses_ancilla, tuple(body))


def circuit_to_matrix(circuit: Circuit) -> ExactMatrix:
    """Exact unitary on the data qubits.

    With an ancilla, the ancilla-0 block is extracted; any amplitude leaking
    from ancilla-0 inputs to ancilla-1 outputs is an error.
    """
    rows = _simulate(circuit.gates, circuit.wire_count)
    if not circuit.uses_ancilla:
        return ExactMatrix(rows)
    size = circuit.dim
    for j in range(size):
        for i in range(size):
            if rows[2 * i + 1][2 * j].num:
                raise VerificationError("circuit does not return the ancilla to zero")
    return ExactMatrix([[rows[2 * i][2 * j] for j in range(size)]
                        for i in range(size)])


def gate_counts(circuit: Circuit) -> dict:
    counts = {"total": 0, "t_count": 0, "h": 0, "cnot": 0,
              "uses_ancilla": circuit.uses_ancilla}
    for gate in circuit.gates:
        if gate.name in ("ANC_INIT", "ANC_FREE"):
            continue
        counts["total"] += 1
        if gate.name in ("T", "TDG"):
            counts["t_count"] += 1
        elif gate.name == "H":
            counts["h"] += 1
        elif gate.name == "CNOT":
            counts["cnot"] += 1
    return counts


def render_circuit(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.data_qubits}"]
    lines.extend(str(gate) for gate in circuit.gates)
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Inverse of render_circuit; # starts a comment, blank lines are skipped."""
    qubits = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "qubits":
            if qubits is not None:
                raise CircuitParseError("duplicate qubits header", line=lineno)
            if gates:
                raise CircuitParseError("qubits header must come first", line=lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise CircuitParseError("expected: qubits <1|2>", line=lineno)
            qubits = int(parts[1])
            continue
        if qubits is None:
            raise CircuitParseError("missing qubits header", line=lineno)
        name = parts[0]
        if name not in GATE_NAMES:
            raise CircuitParseError(f"unknown gate {name!r}", line=lineno)
        try:
            args = [int(p) for p in parts[1:]]
        except ValueError:
            raise CircuitParseError(f"bad arguments for {name}", line=lineno) from None
        try:
            if name == "W":
                if len(args) != 1:
                    raise ValueError("W takes one power argument")
                gates.append(Gate("W", (), args[0]))
            else:
                gates.append(Gate(name, tuple(args)))
        except ValueError as exc:
            raise CircuitParseError(str(exc), line=lineno) from None
    if qubits is None:
        raise CircuitParseError("missing qubits header")
    uses_ancilla = any(g.name == "ANC_INIT" for g in gates)
    try:
        return Circuit(qubits, uses_ancilla, tuple(gates))
    except ValueError as exc:
        raise CircuitParseError(str(exc)) from None
