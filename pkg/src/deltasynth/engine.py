"""Reduction of exact unitaries to elementary-operator words.

The driver invariant: for a unitary with least delta-exponent k > 1, the
mod-delta residue pattern of the scaled matrix must be one of a short list of
shapes (unit entries pair up in rows and columns), and each shape admits a
phase alignment after which a single two-level Hadamard either strictly drops
two lines below k or hands off to a simpler shape at the same k.  At most
four Hadamards later the whole matrix sits strictly below k; iterating
reaches k = 0, where the matrix is a monomial unpicked by swaps and phases.

Left ops act on rows, right ops on columns; inverting and re-ordering the
applied ops yields a word whose exact product equals the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    ExponentOneError,
    ImpossibleBranchError,
    NonMonomialError,
    NoProgressError,
    NotUnitaryError,
    PhaseAlignmentError,
    UnreachablePatternError,
    UnsupportedDimError,
    VerificationError,
)
from .linalg import (
    ElementaryOp,
    ExactMatrix,
    ResidueMatrix,
    apply_elementary,
    delta_exponent,
    h_op,
    invert_elementary,
    is_unitary,
    omega_op,
    residue_matrix,
    word_matrix,
    x_op,
)
from .ring import OMEGA_POWERS, ResidueClass

MAX_HADAMARDS_PER_ROUND = 4
# monomial cleanup needs at most dim-1 swaps and dim phases
MONOMIAL_WORD_MAX = {1: 1, 2: 3, 3: 5, 4: 7}


class CaseTag(str, Enum):
    DENSE_2 = "dense2"
    BLOCK_3 = "block3"
    SINGLE_BLOCK = "single_block"
    FULL_ROWS = "full_rows"
    DOUBLE_BLOCK = "double_block"
    BLOCK_AND_ROWS = "block_and_rows"
    DENSE_4 = "dense4"


@dataclass(frozen=True)
class CasePattern:
    """A residue pattern matched to its template.

    row_perm/col_perm map template positions to actual indices (0-based):
    template row i of the shape lives at row row_perm[i].  transposed marks
    the column variant of FULL_ROWS, the only shape that is not
    permutation-equivalent to its transpose.
    """

    tag: CaseTag
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    transposed: bool = False


@dataclass(frozen=True)
class ReductionRound:
    """One full drop of the delta-exponent: k_before -> k_after < k_before."""

    left_ops: tuple[ElementaryOp, ...]
    right_ops: tuple[ElementaryOp, ...]
    k_before: int
    k_after: int
    case_chain: tuple[str, ...]

    @property
    def hadamard_count(self) -> int:
        return sum(1 for op in self.left_ops + self.right_ops if op.kind == "H")


@dataclass(frozen=True)
class Decomposition:
    """word is a left-to-right product of elementary ops equal to the input."""

    word: tuple[ElementaryOp, ...]
    rounds: tuple[ReductionRound, ...]
    source_k: int
    dim: int


def _weights(pattern: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    dim = len(pattern)
    row_w = [sum(row) for row in pattern]
    col_w = [sum(row[j] for row in pattern) for j in range(dim)]
    return row_w, col_w


def _expect_cells(pattern: Sequence[Sequence[int]], cells: set[tuple[int, int]]) -> None:
    dim = len(pattern)
    for i in range(dim):
        for j in range(dim):
            if pattern[i][j] != (1 if (i, j) in cells else 0):
                raise UnreachablePatternError(
                    f"pattern {pattern!r} does not match any reducible shape")


def classify_pattern(pattern: Sequence[Sequence[int]]) -> CasePattern:
    """Match a 0/1 unit pattern against the reducible shapes.

    Raises UnreachablePatternError for anything a unitary cannot produce at
    delta-exponent k > 1.
    """
    dim = len(pattern)
    if any(len(row) != dim for row in pattern):
        raise ValueError("pattern must be square")
    if any(bit not in (0, 1) for row in pattern for bit in row):
        raise ValueError("pattern entries must be bits")
    if dim == 1 or dim > 4:
        raise UnsupportedDimError(f"no shapes defined for dimension {dim}")
    row_w, col_w = _weights(pattern)
    ident = tuple(range(dim))

    if dim == 2:
        if row_w == [2, 2]:
            return CasePattern(CaseTag.DENSE_2, ident, ident)
        raise UnreachablePatternError(f"2x2 pattern {pattern!r} not all units")

    if dim == 3:
        unit_rows = [i for i, w in enumerate(row_w) if w == 2]
        zero_rows = [i for i, w in enumerate(row_w) if w == 0]
        if len(unit_rows) != 2 or len(zero_rows) != 1:
            raise UnreachablePatternError(f"3x3 pattern {pattern!r} has no block")
        r1, r2 = unit_rows
        support = [j for j in range(3) if pattern[r1][j]]
        _expect_cells(pattern, {(r, c) for r in unit_rows for c in support})
        spare_col = next(j for j in range(3) if j not in support)
        return CasePattern(CaseTag.BLOCK_3,
                           (r1, r2, zero_rows[0]),
                           (*support, spare_col))

    rw_sorted = sorted(row_w)
    cw_sorted = sorted(col_w)

    if rw_sorted == [4, 4, 4, 4]:
        return CasePattern(CaseTag.DENSE_4, ident, ident)

    if rw_sorted == [0, 0, 2, 2]:
        unit_rows = [i for i, w in enumerate(row_w) if w == 2]
        rest_rows = [i for i, w in enumerate(row_w) if w == 0]
        support = [j for j in range(4) if pattern[unit_rows[0]][j]]
        rest_cols = [j for j in range(4) if j not in support]
        _expect_cells(pattern, {(r, c) for r in unit_rows for c in support})
        return CasePattern(CaseTag.SINGLE_BLOCK,
                           (*unit_rows, *rest_rows), (*support, *rest_cols))

    if rw_sorted == [0, 0, 4, 4]:
        unit_rows = [i for i, w in enumerate(row_w) if w == 4]
        rest = [i for i, w in enumerate(row_w) if w == 0]
        return CasePattern(CaseTag.FULL_ROWS, (*unit_rows, *rest), ident)

    if cw_sorted == [0, 0, 4, 4]:
        unit_cols = [j for j, w in enumerate(col_w) if w == 4]
        rest = [j for j, w in enumerate(col_w) if w == 0]
        _expect_cells(pattern, {(r, c) for r in range(4) for c in unit_cols})
        return CasePattern(CaseTag.FULL_ROWS, ident, (*unit_cols, *rest),
                           transposed=True)

    if rw_sorted == [2, 2, 4, 4]:
        light_rows = [i for i, w in enumerate(row_w) if w == 2]
        heavy_rows = [i for i, w in enumerate(row_w) if w == 4]
        heavy_cols = [j for j in range(4) if pattern[light_rows[0]][j]]
        light_cols = [j for j in range(4) if j not in heavy_cols]
        cells = {(r, c) for r in light_rows for c in heavy_cols}
        cells |= {(r, c) for r in heavy_rows for c in range(4)}
        _expect_cells(pattern, cells)
        return CasePattern(CaseTag.BLOCK_AND_ROWS,
                           (*light_rows, *heavy_rows),
                           (*heavy_cols, *light_cols))

    if rw_sorted == [2, 2, 2, 2] and cw_sorted == [2, 2, 2, 2]:
        support_a = tuple(j for j in range(4) if pattern[0][j])
        rows_a = [i for i in range(4)
                  if tuple(j for j in range(4) if pattern[i][j]) == support_a]
        rows_b = [i for i in range(4) if i not in rows_a]
        if len(rows_a) != 2 or len(rows_b) != 2:
            raise UnreachablePatternError(f"pattern {pattern!r} rows do not pair up")
        support_b = tuple(j for j in range(4) if j not in support_a)
        cells = {(r, c) for r in rows_a for c in support_a}
        cells |= {(r, c) for r in rows_b for c in support_b}
        _expect_cells(pattern, cells)
        return CasePattern(CaseTag.DOUBLE_BLOCK,
                           (*rows_a, *rows_b), (*support_a, *support_b))

    raise UnreachablePatternError(
        f"weights {row_w}/{col_w} match no reducible shape")


def phase_offset(row1: Sequence[ResidueClass], row2: Sequence[ResidueClass]) -> int:
    """x mod 4 with w^x * row1 = row2 as unit classes mod delta^3."""
    if not row1 or len(row1) != len(row2):
        raise ValueError("need equal-length nonempty unit rows")
    offset = None
    for r1, r2 in zip(row1, row2):
        if r1.n != 3 or r2.n != 3 or not (r1.is_unit and r2.is_unit):
            raise PhaseAlignmentError("phase alignment needs unit classes mod delta^3")
        diff = (r2.omega_exponent() - r1.omega_exponent()) % 4
        if offset is None:
            offset = diff
        elif diff != offset:
            raise PhaseAlignmentError(
                f"no single omega power aligns {row1!r} with {row2!r}")
    return offset


_UNIT_EXPONENT = {z: p for p, z in enumerate(OMEGA_POWERS)}


def solve_monomial(m: ExactMatrix, *, unitary_checked: bool = False) -> list[ElementaryOp]:
    """Ops (in application order) reducing a delta-exponent-0 unitary to I.

    At exponent 0 a unitary has exactly one entry per row and column, a power
    of w; one swap per column plus one phase per diagonal slot clears it.
    """
    if not unitary_checked and not is_unitary(m):
        raise NotUnitaryError("matrix is not unitary")
    if delta_exponent(m) != 0:
        raise NonMonomialError("delta-exponent must be 0")
    dim = m.dim
    for i in range(dim):
        row_units = sum(1 for e in m.rows[i] if e.num)
        col_units = sum(1 for e in m.column(i) if e.num)
        if row_units != 1 or col_units != 1:
            raise NonMonomialError("not one unit per row and column")

    ops: list[ElementaryOp] = []
    work = m
    for c in range(dim):
        r = next(i for i in range(dim) if work.rows[i][c].num)
        if r != c:
            op = x_op(c + 1, r + 1)
            ops.append(op)
            work = apply_elementary(op, work)
        entry = work.rows[c][c]
        power = _UNIT_EXPONENT.get(entry.num)
        if power is None or entry.k:
            raise NonMonomialError(f"entry {entry!r} is not a power of w")
        if power:
            op = omega_op(c + 1, 8 - power)
            ops.append(op)
            work = apply_elementary(op, work)
    if work != ExactMatrix.identity(dim):
        raise NonMonomialError("monomial cleanup did not reach the identity")
    return ops


def _exponents(res: ResidueMatrix) -> list[list[int | None]]:
    return [[cls.omega_exponent() if cls.is_unit else None for cls in row]
            for row in res.grid]


class _Workspace:
    """Mutable state for one reduction round."""

    def __init__(self, m: ExactMatrix, k: int) -> None:
        self.m = m
        self.k = k
        self.left_ops: list[ElementaryOp] = []
        self.right_ops: list[ElementaryOp] = []
        self.case_chain: list[str] = []
        self.hadamards = 0

    def res3(self) -> ResidueMatrix:
        return residue_matrix(self.m, 3, self.k)

    def exps(self) -> list[list[int | None]]:
        return _exponents(self.res3())

    def phase_left(self, row: int, power: int) -> None:
        if power % 8 == 0:
            return
        op = omega_op(row + 1, power)
        self.left_ops.append(op)
        self.m = apply_elementary(op, self.m)

    def phase_right(self, col: int, power: int) -> None:
        if power % 8 == 0:
            return
        op = omega_op(col + 1, power, side="R")
        self.right_ops.append(op)
        self.m = apply_elementary(op, self.m)

    def swap_right(self, c1: int, c2: int) -> None:
        if c1 == c2:
            return
        op = x_op(min(c1, c2) + 1, max(c1, c2) + 1, side="R")
        self.right_ops.append(op)
        self.m = apply_elementary(op, self.m)

    def _lines_res(self, i1: int, i2: int, side: str) -> tuple:
        res = self.res3()
        if side == "L":
            return res.row(i1), res.row(i2)
        return res.col(i1), res.col(i2)

    def hadamard(self, i1: int, i2: int, side: str = "L") -> None:
        """Mix two congruent lines; the congruence level fixes the outcome.

        Congruence mod delta^3 forces both lines strictly below k afterwards;
        congruence only mod delta^2 forces no increase.  Anything weaker means
        a handler bug, not a property of the input.
        """
        line1, line2 = self._lines_res(i1, i2, side)
        if line1 == line2:
            strict = True
        elif all(a.bits[:2] == b.bits[:2] for a, b in zip(line1, line2)):
            strict = False
        else:
            raise ImpossibleBranchError(
                f"lines {i1},{i2} not congruent mod delta^2 before Hadamard")
        if self.hadamards >= MAX_HADAMARDS_PER_ROUND:
            raise NoProgressError("Hadamard budget for one round exhausted")
        self.hadamards += 1
        op = h_op(min(i1, i2) + 1, max(i1, i2) + 1, side=side)
        (self.left_ops if side == "L" else self.right_ops).append(op)
        self.m = apply_elementary(op, self.m)
        if strict:
            if side == "L":
                worst = max(e.k for i in (i1, i2) for e in self.m.rows[i])
            else:
                worst = max(e.k for i in (i1, i2) for e in self.m.column(i))
            if worst >= self.k:
                raise VerificationError("congruent lines failed to drop")
        elif delta_exponent(self.m) > self.k:
            raise VerificationError("Hadamard increased the delta-exponent")


def _reduce_dense2(ws: _Workspace) -> None:
    res = ws.res3()
    ws.phase_left(0, phase_offset(res.row(0), res.row(1)))
    ws.hadamard(0, 1)


def _reduce_block3(ws: _Workspace, pat: CasePattern) -> None:
    r1, r2 = pat.row_perm[:2]
    c1, c2 = pat.col_perm[:2]
    res = ws.res3()
    block = lambda r: (res.grid[r][c1], res.grid[r][c2])
    ws.phase_left(r1, phase_offset(block(r1), block(r2)))
    ws.hadamard(r1, r2)


def _reduce_single_block(ws: _Workspace, pat: CasePattern) -> None:
    r1, r2 = pat.row_perm[:2]
    c1, c2 = pat.col_perm[:2]
    res = ws.res3()
    block = lambda r: (res.grid[r][c1], res.grid[r][c2])
    ws.phase_left(r1, phase_offset(block(r1), block(r2)))
    exps = ws.exps()
    for c in (c1, c2):
        ws.phase_right(c, (-exps[r2][c]) % 4)
    ws.hadamard(r1, r2)


def _reduce_full_rows(ws: _Workspace, pat: CasePattern) -> None:
    res = ws.res3()
    if pat.transposed:
        c1, c2 = pat.col_perm[:2]
        ws.phase_right(c1, phase_offset(res.col(c1), res.col(c2)))
        ws.hadamard(c1, c2, side="R")
    else:
        r1, r2 = pat.row_perm[:2]
        ws.phase_left(r1, phase_offset(res.row(r1), res.row(r2)))
        ws.hadamard(r1, r2)


def _reduce_double_block(ws: _Workspace, pat: CasePattern) -> None:
    r1, r2 = pat.row_perm[:2]
    c1, c2 = pat.col_perm[:2]
    res = ws.res3()
    block = lambda r: (res.grid[r][c1], res.grid[r][c2])
    ws.phase_left(r1, phase_offset(block(r1), block(r2)))
    ws.hadamard(r1, r2)


def _reduce_block_and_rows(ws: _Workspace, pat: CasePattern) -> None:
    r1, r2, r3, r4 = pat.row_perm
    c1, c2 = pat.col_perm[:2]
    res = ws.res3()
    block = lambda r: (res.grid[r][c1], res.grid[r][c2])
    ws.phase_left(r1, phase_offset(block(r1), block(r2)))
    res = ws.res3()
    if res.row(r1) == res.row(r2):
        ws.hadamard(r1, r2)
        return
    if not all(a.bits[:2] == b.bits[:2] for a, b in zip(res.row(r1), res.row(r2))):
        raise ImpossibleBranchError("light rows not congruent mod delta^2")
    # the light rows keep their defect; drop the full rows instead
    ws.phase_left(r3, phase_offset(block(r3), block(r4)))
    ws.hadamard(r3, r4)


def _reduce_dense4(ws: _Workspace) -> None:
    exps = ws.exps()
    diffs = [(exps[1][j] - exps[0][j]) % 4 for j in range(4)]
    values = set(diffs)
    if len(values) == 1:
        ws.phase_left(0, diffs[0])
        ws.hadamard(0, 1)
    elif len(values) == 4:
        _dense4_all_distinct(ws)
    elif len(values) == 2 and all(diffs.count(v) == 2 for v in values):
        _dense4_two_pairs(ws)
    else:
        raise ImpossibleBranchError(
            f"row phase differences {diffs} split 3/1, excluded by unitarity")


def _dense4_all_distinct(ws: _Workspace) -> None:
    exps = ws.exps()
    for j in range(4):
        ws.phase_right(j, (-exps[0][j]) % 4)
    exps = ws.exps()
    ws.phase_left(1, (-exps[1][0]) % 4)
    exps = ws.exps()
    # sort the second row to (1, w, w^2, w^3) with column swaps
    if exps[1][1] != 1:
        target = next(c for c in (2, 3) if exps[1][c] == 1)
        ws.swap_right(1, target)
        exps = ws.exps()
    if exps[1][2] != 2:
        ws.swap_right(2, 3)
        exps = ws.exps()
    if exps[1][:4] != [0, 1, 2, 3]:
        raise ImpossibleBranchError(f"distinct differences failed to sort: {exps[1]}")
    ws.phase_left(2, (-exps[2][0]) % 4)
    exps = ws.exps()
    l, mm, p = exps[2][1], exps[2][2], exps[2][3]

    if sorted((l, mm, p)) == [1, 2, 3]:
        if (l, mm, p) in ((1, 2, 3), (3, 2, 1)):
            ws.hadamard(1, 2)
        else:
            raise ImpossibleBranchError(f"ordering {(l, mm, p)} excluded by unitarity")
    elif l == mm == p == 0:
        ws.hadamard(0, 2)
    elif l == 0 and mm == p != 0:
        if mm % 2 == 0:
            ws.hadamard(0, 2)
        else:
            raise ImpossibleBranchError("odd pair against sorted row excluded")
    elif mm == 0 and l == p != 0:
        if l % 2 == 1:
            ws.hadamard(1, 2)
        else:
            ws.hadamard(0, 2)
    elif p == 0 and l == mm != 0:
        if l % 2 == 0:
            ws.hadamard(0, 2)
        else:
            raise ImpossibleBranchError("odd pair against sorted row excluded")
    else:
        raise ImpossibleBranchError(f"unit triple {(l, mm, p)} excluded by unitarity")


def _dense4_two_pairs(ws: _Workspace) -> None:
    exps = ws.exps()
    diffs = [(exps[1][j] - exps[0][j]) % 4 for j in range(4)]
    partner = next(j for j in range(1, 4) if diffs[j] == diffs[0])
    if partner != 1:
        ws.swap_right(1, partner)
    exps = ws.exps()
    for j in range(4):
        ws.phase_right(j, (-exps[0][j]) % 4)
    exps = ws.exps()
    ws.phase_left(1, (-exps[1][0]) % 4)
    ws.phase_left(2, (-exps[2][0]) % 4)
    exps = ws.exps()
    if exps[1][1] != 0 or exps[1][2] != exps[1][3]:
        raise ImpossibleBranchError(f"pair structure lost: {exps[1]}")
    g = exps[1][2]
    if g == 2:
        ws.hadamard(0, 1)
        return
    if g == 3:
        # shift the light columns so the g-row becomes the all-ones row
        ws.phase_right(2, 1)
        ws.phase_right(3, 1)
        exps = ws.exps()
        ones_row, g_row = 1, 0
    else:
        ones_row, g_row = 0, 1
    _pairs_tree(ws, ones_row, g_row, 2, exps[2][1], exps[2][2], exps[2][3])


def _pairs_tree(ws: _Workspace, ones_row: int, g_row: int, third: int,
                l: int, mm: int, p: int) -> None:
    """Sub-cases against rows (1,1,1,1) and (1,1,w,w); third row is (1,w^l,w^mm,w^p)."""
    if sorted((l, mm, p)) == [1, 2, 3]:
        if (l, mm, p) in ((2, 1, 3), (2, 3, 1)):
            ws.hadamard(g_row, third)
        else:
            raise ImpossibleBranchError(f"ordering {(l, mm, p)} excluded by unitarity")
    elif l == mm == p == 0:
        ws.hadamard(ones_row, third)
    elif l == 0 and mm == p != 0:
        if mm % 2 == 0:
            ws.hadamard(ones_row, third)
        else:
            ws.hadamard(g_row, third)
    elif mm == 0 and l == p != 0:
        if l % 2 == 0:
            ws.hadamard(ones_row, third)
        else:
            raise ImpossibleBranchError("odd diagonal pair excluded by unitarity")
    elif p == 0 and l == mm != 0:
        if l % 2 == 0:
            ws.hadamard(ones_row, third)
        else:
            raise ImpossibleBranchError("odd diagonal pair excluded by unitarity")
    else:
        raise ImpossibleBranchError(f"unit triple {(l, mm, p)} excluded by unitarity")


_HANDLERS = {
    CaseTag.DENSE_2: lambda ws, pat: _reduce_dense2(ws),
    CaseTag.BLOCK_3: _reduce_block3,
    CaseTag.SINGLE_BLOCK: _reduce_single_block,
    CaseTag.FULL_ROWS: _reduce_full_rows,
    CaseTag.DOUBLE_BLOCK: _reduce_double_block,
    CaseTag.BLOCK_AND_ROWS: _reduce_block_and_rows,
    CaseTag.DENSE_4: lambda ws, pat: _reduce_dense4(ws),
}


def reduction_round(m: ExactMatrix, k: int | None = None, *,
                    unitary_checked: bool = False) -> tuple[ReductionRound, ExactMatrix]:
    """Apply ops until the delta-exponent strictly drops; return (round, result)."""
    if not unitary_checked and not is_unitary(m):
        raise NotUnitaryError("matrix is not unitary")
    measured = delta_exponent(m)
    if k is None:
        k = measured
    elif k != measured:
        raise ValueError(f"stated exponent {k} but matrix has {measured}")
    if k == 1:
        raise ExponentOneError("delta-exponent 1 cannot occur for a unitary")
    if k < 1:
        raise ValueError("nothing to reduce at exponent 0")

    ws = _Workspace(m, k)
    while delta_exponent(ws.m) == k:
        pattern = residue_matrix(ws.m, 1, k).pattern()
        pat = classify_pattern(pattern)
        ws.case_chain.append(pat.tag.value)
        _HANDLERS[pat.tag](ws, pat)
    k_after = delta_exponent(ws.m)
    if k_after >= k:
        raise NoProgressError(f"round ended at exponent {k_after} >= {k}")
    rnd = ReductionRound(tuple(ws.left_ops), tuple(ws.right_ops),
                         k, k_after, tuple(ws.case_chain))
    return rnd, ws.m


def _as_left(op: ElementaryOp) -> ElementaryOp:
    if op.side == "L":
        return op
    return ElementaryOp(op.kind, op.j, op.m, op.power, "L")


def synthesize(m: ExactMatrix, *, debug: bool = False) -> Decomposition:
    """Exact elementary-operator word for a unitary over D[w].

    The word multiplies out (left factor first) to exactly m.  debug re-checks
    unitarity after every round and the final product.
    """
    if not is_unitary(m):
        raise NotUnitaryError("input matrix is not unitary")
    source_k = delta_exponent(m)
    work = m
    rounds: list[ReductionRound] = []
    lefts: list[ElementaryOp] = []
    rights: list[ElementaryOp] = []
    k = source_k
    while k > 1:
        rnd, work = reduction_round(work, k, unitary_checked=True)
        if debug and not is_unitary(work):
            raise VerificationError("round output lost unitarity")
        rounds.append(rnd)
        lefts.extend(rnd.left_ops)
        rights.extend(rnd.right_ops)
        k = rnd.k_after
    if k == 1:
        raise ExponentOneError("delta-exponent 1 cannot occur for a unitary")
    lefts.extend(solve_monomial(work, unitary_checked=True))

    word: list[ElementaryOp] = []
    for op in lefts:
        word.extend(_as_left(inv) for inv in invert_elementary(op))
    for op in reversed(rights):
        word.extend(_as_left(inv) for inv in invert_elementary(op))
    dec = Decomposition(tuple(word), tuple(rounds), source_k, m.dim)
    if debug and not verify_decomposition(m, dec):
        raise VerificationError("decomposition product mismatch")
    return dec


def verify_decomposition(m: ExactMatrix, dec: Decomposition) -> bool:
    """Exact check: does the word multiply out to m?"""
    if dec.dim != m.dim:
        return False
    return word_matrix(dec.word, m.dim) == m
