"""Exact arithmetic in Z[w] and D[w] for w = exp(i*pi/4).

Elements are integer coefficient vectors (a, b, c, d) standing for
a*w^3 + b*w^2 + c*w + d.  The distinguished element delta = 1 + w satisfies
delta^2 = sqrt(2) * (unit) and generates the prime ideal above 2, so every
element of D[w] = Z[1/sqrt(2), i] is num / delta^k for a unique minimal k.
That exponent is the complexity measure the synthesis engine reduces, and the
residue rings Z[w]/(delta^n) for n <= 3 drive its case analysis.

Everything here is exact: coefficients are arbitrary-precision ints and
nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass


class ZOmega:
    """Element a*w^3 + b*w^2 + c*w + d of Z[w]."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int) -> None:
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    @classmethod
    def from_int(cls, d: int) -> ZOmega:
        return cls(0, 0, 0, d)

    def __repr__(self) -> str:
        return f"ZOmega({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c},{self.d}"

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZOmega):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __add__(self, other: ZOmega) -> ZOmega:
        return ZOmega(self.a + other.a, self.b + other.b,
                      self.c + other.c, self.d + other.d)

    def __sub__(self, other: ZOmega) -> ZOmega:
        return ZOmega(self.a - other.a, self.b - other.b,
                      self.c - other.c, self.d - other.d)

    def __neg__(self) -> ZOmega:
        return ZOmega(-self.a, -self.b, -self.c, -self.d)

    def _single_term(self) -> tuple[int, int] | None:
        """(omega power, coefficient) when at most one coefficient is nonzero."""
        a, b, c, d = self.a, self.b, self.c, self.d
        if a:
            if b or c or d:
                return None
            return 3, a
        if b:
            if c or d:
                return None
            return 2, b
        if c:
            if d:
                return None
            return 1, c
        return 0, d

    def __mul__(self, other: ZOmega) -> ZOmega:
        if not isinstance(other, ZOmega):
            return NotImplemented
        # Entries of the matrices being synthesized are very often 0 or a
        # unit +-w^p, so a rotate-and-scale fast path pays for itself.
        for x, y in ((self, other), (other, self)):
            single = y._single_term()
            if single is not None:
                p, s = single
                if not s:
                    return ZOmega(0, 0, 0, 0)
                z = x.mul_omega_power(p)
                if s == 1:
                    return z
                return ZOmega(z.a * s, z.b * s, z.c * s, z.d * s)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return ZOmega(
            a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
            b1 * d2 + c1 * c2 + d1 * b2 - a1 * a2,
            c1 * d2 + d1 * c2 - a1 * b2 - b1 * a2,
            d1 * d2 - a1 * c2 - b1 * b2 - c1 * a2,
        )

    def mul_omega_power(self, p: int) -> ZOmega:
        """Multiply by w^p: a coefficient rotation with sign wrap (w^4 = -1)."""
        p &= 7
        a, b, c, d = self.a, self.b, self.c, self.d
        if p >= 4:
            a, b, c, d = -a, -b, -c, -d
            p -= 4
        if p == 0:
            return ZOmega(a, b, c, d)
        if p == 1:
            return ZOmega(b, c, d, -a)
        if p == 2:
            return ZOmega(c, d, -a, -b)
        return ZOmega(d, -a, -b, -c)

    def conj(self) -> ZOmega:
        """Complex conjugation: i -> -i, so w^k -> w^(-k)."""
        return ZOmega(-self.c, -self.b, -self.a, self.d)

    def conj_sq2(self) -> ZOmega:
        """sqrt(2)-conjugation: sqrt(2) -> -sqrt(2), i fixed, so w -> -w."""
        return ZOmega(-self.a, self.b, -self.c, self.d)

    def norm(self) -> int:
        """Rational integer norm: the product of all four conjugates."""
        a, b, c, d = self.a, self.b, self.c, self.d
        return (a * a + b * b + c * c + d * d) ** 2 \
            - 2 * (c * d + b * c + a * b - d * a) ** 2

    def times_delta(self) -> ZOmega:
        """Multiply by delta = 1 + w."""
        rot = self.mul_omega_power(1)
        return ZOmega(self.a + rot.a, self.b + rot.b,
                      self.c + rot.c, self.d + rot.d)

    def approx(self) -> complex:
        """Floating-point value, for debug display only."""
        inv = 2.0 ** -0.5
        return complex(self.d + (self.c - self.a) * inv,
                       self.b + (self.c + self.a) * inv)


ZW_ZERO = ZOmega(0, 0, 0, 0)
ZW_ONE = ZOmega(0, 0, 0, 1)
ZW_OMEGA = ZOmega(0, 0, 1, 0)
ZW_DELTA = ZW_ONE + ZW_OMEGA
ZW_DELTA2 = ZW_DELTA * ZW_DELTA
ZW_SQRT2 = ZOmega(-1, 0, 1, 0)  # w - w^3
# 2/delta: times_delta gives exactly 2.
TWO_OVER_DELTA = ZOmega(-1, 1, -1, 1)
# delta^2 = UNIT_SQRT2 * sqrt(2); UNIT_SQRT2 has norm 1.
UNIT_SQRT2 = ZOmega(0, 1, 1, 1)
UNIT_SQRT2_INV = UNIT_SQRT2.conj() * UNIT_SQRT2.conj_sq2() \
    * UNIT_SQRT2.conj().conj_sq2()

OMEGA_POWERS = tuple(ZW_ONE.mul_omega_power(p) for p in range(8))


def divide_by_delta(x: ZOmega) -> ZOmega | None:
    """x / delta when delta divides x, else None.

    delta * (2/delta) = 2, so x * (2/delta) must have all-even coefficients
    exactly when delta | x, and halving that product is the quotient.
    """
    y = x * TWO_OVER_DELTA
    if (y.a | y.b | y.c | y.d) & 1:
        return None
    return ZOmega(y.a >> 1, y.b >> 1, y.c >> 1, y.d >> 1)


def residue_bits(x: ZOmega) -> tuple[int, int, int]:
    """Coordinates of x mod delta^3 in the additive basis {1, delta, delta^2}.

    Z[w]/(delta^3) has 8 elements and exponent-2 additive group, so the
    coordinates are bits and are linear in the coefficients mod 2.
    """
    a, b, c, d = x.a, x.b, x.c, x.d
    return (a + b + c + d) & 1, (a + c) & 1, (a + b) & 1


@dataclass(frozen=True)
class ResidueClass:
    """Element of Z[w]/(delta^n) for n in {1, 2, 3}.

    bits are the coordinates over the basis (1, delta, delta^2) truncated
    to length n.  The classes with bits[0] == 1 are exactly the units, and
    for n == 3 a unit equals w^s with s = bits[1] + 2*bits[2].
    """

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n not in (1, 2, 3):
            raise ValueError(f"modulus exponent must be 1..3, got {self.n}")
        if len(self.bits) != self.n or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"need {self.n} bits, got {self.bits!r}")

    def lift(self) -> ZOmega:
        """The canonical representative x0 + x1*delta + x2*delta^2."""
        z = ZW_ZERO
        if self.bits[0]:
            z = z + ZW_ONE
        if self.n > 1 and self.bits[1]:
            z = z + ZW_DELTA
        if self.n > 2 and self.bits[2]:
            z = z + ZW_DELTA2
        return z

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)

    @property
    def is_unit(self) -> bool:
        return self.bits[0] == 1

    def omega_exponent(self) -> int:
        """s with self == class of w^s; only units (n == 3) have one."""
        if self.n != 3 or not self.bits[0]:
            raise ValueError(f"{self!r} is not a unit class mod delta^3")
        return self.bits[1] + 2 * self.bits[2]

    def _binop(self, other: ResidueClass, mul: bool) -> ResidueClass:
        if not isinstance(other, ResidueClass) or other.n != self.n:
            raise ValueError("mismatched moduli")
        x, y = self.lift(), other.lift()
        return residue(x * y if mul else x + y, self.n)

    def __add__(self, other: ResidueClass) -> ResidueClass:
        return self._binop(other, mul=False)

    def __mul__(self, other: ResidueClass) -> ResidueClass:
        return self._binop(other, mul=True)


def residue(x: ZOmega, n: int) -> ResidueClass:
    """The class of x in Z[w]/(delta^n)."""
    return ResidueClass(n, residue_bits(x)[:n])


class DOmega:
    """num / delta^k in D[w], kept in canonical form.

    Canonical: k == 0, or delta does not divide num; and num == 0 forces
    k == 0.  The constructor reduces any (num, k) pair, so k afterwards is
    the least delta-exponent of the value and equality is structural.
    """

    __slots__ = ("num", "k")

    def __init__(self, num: ZOmega, k: int) -> None:
        if k < 0:
            raise ValueError("delta exponent must be >= 0")
        if not num:
            self.num = ZW_ZERO
            self.k = 0
            return
        while k > 0:
            quotient = divide_by_delta(num)
            if quotient is None:
                break
            num = quotient
            k -= 1
        self.num = num
        self.k = k

    @classmethod
    def _raw(cls, num: ZOmega, k: int) -> DOmega:
        """Skip reduction for a result known to be canonical already."""
        self = object.__new__(cls)
        self.num = num
        self.k = k
        return self

    @classmethod
    def from_zomega(cls, num: ZOmega) -> DOmega:
        return cls._raw(num, 0)

    @classmethod
    def from_int(cls, d: int) -> DOmega:
        return cls._raw(ZOmega(0, 0, 0, d), 0)

    def __repr__(self) -> str:
        return f"DOmega({self.num!r}, {self.k})"

    def __str__(self) -> str:
        return f"{self.num}/{self.k}"

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DOmega):
            return NotImplemented
        return self.k == other.k and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.num, self.k))

    def _lift_to(self, k: int) -> ZOmega:
        """num scaled so the value equals result / delta^k (k >= self.k)."""
        num = self.num
        for _ in range(k - self.k):
            num = num.times_delta()
        return num

    def __add__(self, other: DOmega) -> DOmega:
        k = self.k if self.k >= other.k else other.k
        return DOmega(self._lift_to(k) + other._lift_to(k), k)

    def __sub__(self, other: DOmega) -> DOmega:
        k = self.k if self.k >= other.k else other.k
        return DOmega(self._lift_to(k) - other._lift_to(k), k)

    def __neg__(self) -> DOmega:
        return DOmega._raw(-self.num, self.k)

    def __mul__(self, other: DOmega) -> DOmega:
        num = self.num * other.num
        k = self.k + other.k
        if not num:
            return D_ZERO
        if k == 0 or (self.k and other.k):
            # delta is prime, so a product of delta-free numerators stays
            # delta-free and no reduction pass is needed.
            return DOmega._raw(num, k)
        return DOmega(num, k)

    def mul_omega_power(self, p: int) -> DOmega:
        return DOmega._raw(self.num.mul_omega_power(p), self.k)

    def conj(self) -> DOmega:
        """Complex conjugation."""
        # conj(delta) = 1 + w^-1 = w^-1 * delta, so the denominator
        # contributes a factor w^k to the numerator.
        return DOmega._raw(self.num.conj().mul_omega_power(self.k), self.k)

    def residue_at(self, k: int, n: int) -> ResidueClass:
        """Class of delta^k * self mod delta^n (requires k >= self.k)."""
        if k < self.k:
            raise ValueError(f"delta-exponent {k} below least exponent {self.k}")
        shift = k - self.k
        if shift >= 3:
            return ResidueClass(n, (0,) * n)
        num = self.num
        for _ in range(shift):
            num = num.times_delta()
        return residue(num, n)

    def approx(self) -> complex:
        """Floating-point value, for debug display only."""
        return self.num.approx() / _DELTA_APPROX ** self.k


_DELTA_APPROX = 1 + (2 ** -0.5) * (1 + 1j)

D_ZERO = DOmega._raw(ZW_ZERO, 0)
D_ONE = DOmega._raw(ZW_ONE, 0)
# 1/sqrt(2) = UNIT_SQRT2 / delta^2.
D_INV_SQRT2 = DOmega._raw(UNIT_SQRT2, 2)


def from_sqrt2_form(a: int, b: int, c: int, d: int, m: int) -> DOmega:
    """Value of (a + b*sqrt(2) + i*(c + d*sqrt(2))) / sqrt(2)^m.

    This is the interchange representation of D[w] entries; internally
    sqrt(2)^m becomes delta^(2m) divided by the norm-1 unit UNIT_SQRT2^m.
    """
    if m < 0:
        raise ValueError("sqrt(2) exponent must be >= 0")
    # 1 = w^0, i = w^2, sqrt(2) = w - w^3, i*sqrt(2) = w + w^3.
    num = ZOmega(d - b, c, b + d, a)
    unit = ZW_ONE
    for _ in range(m):
        unit = unit * UNIT_SQRT2
    return DOmega(num * unit, 2 * m)


def to_sqrt2_form(x: DOmega) -> tuple[int, int, int, int, int]:
    """Inverse of from_sqrt2_form: (a, b, c, d, m) with x equal to that value."""
    m = (x.k + 1) // 2
    num = x.num
    if 2 * m > x.k:
        num = num.times_delta()
    for _ in range(m):
        num = num * UNIT_SQRT2_INV
    if (num.a ^ num.c) & 1:
        # Real and imaginary parts sit on half-integer sqrt(2) multiples;
        # widen the denominator by one sqrt(2) to clear them.
        num = num * ZW_SQRT2
        m += 1
    return (num.d, (num.c - num.a) >> 1, num.b, (num.c + num.a) >> 1, m)
