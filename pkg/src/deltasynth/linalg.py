"""Exact matrices over D[w] and the elementary 1- and 2-level operators.

Matrices are immutable tuples of tuples of DOmega, dimensions 1 through 4.
Elementary operators (a phase w^p on one basis vector, or a Hadamard-type or
swap-type mixing of two basis vectors) are what the synthesis engine emits;
applying one touches at most two rows or columns, so application is O(dim)
ring operations instead of a full matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import UnsupportedDimError
from .ring import D_INV_SQRT2, D_ONE, D_ZERO, DOmega, ResidueClass

MAX_DIM = 4


class ExactMatrix:
    """Square matrix over D[w], dim 1..4, immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[DOmega]]) -> None:
        grid = tuple(tuple(row) for row in rows)
        dim = len(grid)
        if not 1 <= dim <= MAX_DIM:
            raise UnsupportedDimError(f"dimension {dim} not supported")
        if any(len(row) != dim for row in grid):
            raise ValueError("matrix must be square")
        self.rows = grid

    @classmethod
    def identity(cls, dim: int) -> ExactMatrix:
        return cls(tuple(tuple(D_ONE if i == j else D_ZERO for j in range(dim))
                         for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> DOmega:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[DOmega, ...]:
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows!r})"

    def key(self) -> str:
        """Canonical text key; collision-free because entries are canonical."""
        return ";".join(" ".join(str(e) for e in row) for row in self.rows)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    cols = [b.column(j) for j in range(b.dim)]
    out = []
    for row in a.rows:
        out_row = []
        for col in cols:
            acc = D_ZERO
            for x, y in zip(row, col):
                if x.num and y.num:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return ExactMatrix(out)


def adjoint(m: ExactMatrix) -> ExactMatrix:
    dim = m.dim
    return ExactMatrix(tuple(tuple(m.rows[j][i].conj() for j in range(dim))
                             for i in range(dim)))


def is_unitary(m: ExactMatrix) -> bool:
    return mat_mul(adjoint(m), m) == ExactMatrix.identity(m.dim)


def delta_exponent(m: ExactMatrix) -> int:
    """Least k with delta^k * m integral: the max entry exponent."""
    return max(e.k for row in m.rows for e in row)


@dataclass(frozen=True)
class ResidueMatrix:
    """Entrywise classes of delta^k * m in Z[w]/(delta^n)."""

    dim: int
    n: int
    k: int
    grid: tuple[tuple[ResidueClass, ...], ...]

    def row(self, i: int) -> tuple[ResidueClass, ...]:
        return self.grid[i]

    def col(self, j: int) -> tuple[ResidueClass, ...]:
        return tuple(row[j] for row in self.grid)

    def pattern(self) -> tuple[tuple[int, ...], ...]:
        """Unit-indicator bits (the mod-delta pattern)."""
        return tuple(tuple(cls.bits[0] for cls in row) for row in self.grid)


def residue_matrix(m: ExactMatrix, n: int, k: int) -> ResidueMatrix:
    if k < delta_exponent(m):
        raise ValueError(
            f"scaling exponent {k} below matrix delta-exponent {delta_exponent(m)}")
    grid = tuple(tuple(e.residue_at(k, n) for e in row) for row in m.rows)
    return ResidueMatrix(m.dim, n, k, grid)


OpKind = Literal["omega", "H", "X"]
Side = Literal["L", "R"]


@dataclass(frozen=True)
class ElementaryOp:
    """One-level phase (w^power on basis vector j) or a two-level H / X.

    Indices are 1-based, j < m for two-level kinds.  side records whether the
    operator was applied on the left (rows) or right (columns) during a
    reduction; the op's matrix is the same either way.
    """

    kind: OpKind
    j: int
    m: int = 0
    power: int = 0
    side: Side = "L"

    def __post_init__(self) -> None:
        if self.j < 1:
            raise ValueError("indices are 1-based")
        if self.kind == "omega":
            if not 1 <= self.power <= 7:
                raise ValueError("phase power must be 1..7")
            if self.m:
                raise ValueError("one-level op takes a single index")
        elif self.kind in ("H", "X"):
            if not self.j < self.m:
                raise ValueError("two-level op needs j < m")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "omega":
            return f"w[{self.j}]^{self.power}"
        return f"{self.kind}[{self.j},{self.m}]"


def omega_op(j: int, power: int, side: Side = "L") -> ElementaryOp:
    return ElementaryOp("omega", j, 0, power % 8, side)


def h_op(j: int, m: int, side: Side = "L") -> ElementaryOp:
    return ElementaryOp("H", j, m, 0, side)


def x_op(j: int, m: int, side: Side = "L") -> ElementaryOp:
    return ElementaryOp("X", j, m, 0, side)


def invert_elementary(op: ElementaryOp) -> list[ElementaryOp]:
    """A word for op^-1 (H and X are involutions, phases invert mod 8)."""
    if op.kind == "omega":
        return [omega_op(op.j, 8 - op.power, op.side)]
    return [op]


def _check_indices(op: ElementaryOp, dim: int) -> None:
    top = op.m if op.kind != "omega" else op.j
    if top > dim:
        raise ValueError(f"op {op} out of range for dimension {dim}")


def apply_elementary(op: ElementaryOp, m: ExactMatrix) -> ExactMatrix:
    """op @ m for side L, m @ op for side R, via two-line surgery."""
    _check_indices(op, m.dim)
    rows = list(m.rows)
    if op.side == "L":
        if op.kind == "omega":
            i = op.j - 1
            rows[i] = tuple(e.mul_omega_power(op.power) for e in rows[i])
        elif op.kind == "X":
            i, j = op.j - 1, op.m - 1
            rows[i], rows[j] = rows[j], rows[i]
        else:
            i, j = op.j - 1, op.m - 1
            top, bot = rows[i], rows[j]
            rows[i] = tuple((x + y) * D_INV_SQRT2 for x, y in zip(top, bot))
            rows[j] = tuple((x - y) * D_INV_SQRT2 for x, y in zip(top, bot))
    else:
        if op.kind == "omega":
            c = op.j - 1
            rows = [row[:c] + (row[c].mul_omega_power(op.power),) + row[c + 1:]
                    for row in rows]
        elif op.kind == "X":
            c, d = op.j - 1, op.m - 1
            rows = [_swapped(row, c, d) for row in rows]
        else:
            c, d = op.j - 1, op.m - 1
            new_rows = []
            for row in rows:
                x, y = row[c], row[d]
                row = list(row)
                row[c] = (x + y) * D_INV_SQRT2
                row[d] = (x - y) * D_INV_SQRT2
                new_rows.append(tuple(row))
            rows = new_rows
    return ExactMatrix(rows)


def _swapped(row: Sequence[DOmega], c: int, d: int) -> tuple[DOmega, ...]:
    out = list(row)
    out[c], out[d] = out[d], out[c]
    return tuple(out)


def elementary_matrix(op: ElementaryOp, dim: int) -> ExactMatrix:
    """The dim x dim matrix of op (side-independent)."""
    left = op if op.side == "L" else ElementaryOp(op.kind, op.j, op.m, op.power, "L")
    return apply_elementary(left, ExactMatrix.identity(dim))


def apply_word(word: Sequence[ElementaryOp], m: ExactMatrix,
               side: Side = "L") -> ExactMatrix:
    """Multiply m by a left-to-right product of ops, ignoring their side tags.

    side "L": (w1 w2 ... wn) @ m, so the word is applied last-first.
    side "R": m @ (w1 w2 ... wn).
    """
    if side == "L":
        for op in reversed(word):
            m = apply_elementary(ElementaryOp(op.kind, op.j, op.m, op.power, "L"), m)
    else:
        for op in word:
            m = apply_elementary(ElementaryOp(op.kind, op.j, op.m, op.power, "R"), m)
    return m


def word_matrix(word: Sequence[ElementaryOp], dim: int) -> ExactMatrix:
    """Exact product of the word as written, left factor first."""
    return apply_word(word, ExactMatrix.identity(dim), side="R")
