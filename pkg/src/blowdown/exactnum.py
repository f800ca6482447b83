"""Exact rational scalars, small symmetric matrices, and symbolic constants.

Everything here is exact: rationals are ``fractions.Fraction`` (always in
lowest terms, positive denominator), linear solves and minors run
fraction-free Bareiss elimination on denominator-cleared integer matrices,
and closed-form constants of the shape ``sign * q * pi^a * sqrt(r)`` are
kept symbolic so they can be compared without rounding.  Decimal output is
display-only and never feeds back into a computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import InvalidParameters, SingularMatrix

Rat = Fraction

# 100 decimal digits; rendering precision is capped well below this.
_PI_100 = Decimal(
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"
)


def as_rat(value) -> Fraction:
    """Coerce an int, string, or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InvalidParameters(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class QMatrix:
    """A small symmetric matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise InvalidParameters("matrix dimension must be at least 1")
        for row in self.entries:
            if len(row) != n:
                raise InvalidParameters("matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise InvalidParameters(
                        f"matrix not symmetric at ({i}, {j}): "
                        f"{self.entries[i][j]} != {self.entries[j][i]}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "QMatrix":
        return cls(tuple(tuple(as_rat(x) for x in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def submatrix(self, indices: Sequence[int]) -> "QMatrix":
        return QMatrix(
            tuple(tuple(self.entries[i][j] for j in indices) for i in indices)
        )


def _cleared_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; returns integer rows and the scales."""
    out, scales = [], []
    for row in rows:
        s = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * s) for x in row])
        scales.append(s)
    return out, scales


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix (destructive)."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[-1][-1]


def determinant(mat: QMatrix) -> Fraction:
    """Exact determinant."""
    ints, scales = _cleared_rows(mat.entries)
    d = _int_det(ints)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(d, denom)


def leading_principal_minors(mat: QMatrix) -> tuple[Fraction, ...]:
    """Exact determinants of the leading k-by-k blocks, k = 1..dim."""
    ints, scales = _cleared_rows(mat.entries)
    minors = []
    denom = 1
    for k in range(1, mat.dim + 1):
        denom *= scales[k - 1]
        block = [row[:k] for row in ints[:k]]
        minors.append(Fraction(_int_det(block), denom))
    return tuple(minors)


def is_negative_definite(mat: QMatrix) -> bool:
    """True iff the leading principal minors strictly alternate in sign, starting negative."""
    for k, minor in enumerate(leading_principal_minors(mat), start=1):
        if minor == 0:
            return False
        if (minor < 0) != (k % 2 == 1):
            return False
    return True


def solve_symmetric(gram: QMatrix, rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve gram * x = rhs exactly.

    Raises SingularMatrix when the determinant is zero.  The elimination is
    Bareiss fraction-free on the denominator-cleared augmented system, so no
    intermediate value is ever rounded.
    """
    n = gram.dim
    b = [as_rat(x) for x in rhs]
    if len(b) != n:
        raise InvalidParameters(f"rhs has length {len(b)}, expected {n}")
    aug = [list(gram.entries[i]) + [b[i]] for i in range(n)]
    rows, _ = _cleared_rows(aug)

    prev = 1
    for k in range(n):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    break
            else:
                raise SingularMatrix("gram matrix has zero determinant")
        if k == n - 1:
            break
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return tuple(x)


def _square_free_split(n: int) -> tuple[int, int]:
    """Write n = s^2 * r with r square-free; returns (s, r)."""
    s, r = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    return s, r * n


@dataclass(frozen=True)
class SymbolicValue:
    """An exact constant sign * coefficient * pi^pi_power * sqrt(radicand).

    Raw values may carry square factors inside the radicand; ``canonical()``
    extracts them, after which equality of values is plain field equality.
    The zero value canonicalizes to sign 0 with coefficient 0 and radicand 1.
    """

    sign: int
    coefficient: Fraction
    pi_power: int
    radicand: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise InvalidParameters(f"sign must be -1, 0, or 1, got {self.sign}")
        object.__setattr__(self, "coefficient", as_rat(self.coefficient))
        if self.coefficient < 0:
            raise InvalidParameters("coefficient must be non-negative (sign is separate)")
        if self.pi_power < 0 or self.radicand < 0:
            raise InvalidParameters("pi_power and radicand must be non-negative")

    @classmethod
    def zero(cls) -> "SymbolicValue":
        return cls(0, Fraction(0), 0, 1)

    @classmethod
    def of(cls, value, pi_power: int = 0, radicand: int = 1) -> "SymbolicValue":
        """Canonical value from a signed rational times pi^a * sqrt(r)."""
        q = as_rat(value)
        sign = (q > 0) - (q < 0)
        return cls(sign, abs(q), pi_power, radicand).canonical()

    @property
    def is_zero(self) -> bool:
        return self.sign == 0 or self.coefficient == 0 or self.radicand == 0

    def canonical(self) -> "SymbolicValue":
        if self.is_zero:
            return SymbolicValue.zero()
        s, r = _square_free_split(self.radicand)
        return SymbolicValue(self.sign, self.coefficient * s, self.pi_power, r)

    def decimal(self, digits: int = 12) -> str:
        """Decimal rendering at the given significant digits; display-only."""
        if digits < 1 or digits > 50:
            raise InvalidParameters("supported precision is 1..50 significant digits")
        if self.is_zero:
            return "0"
        with localcontext() as ctx:
            ctx.prec = digits + 15
            val = Decimal(self.coefficient.numerator) / Decimal(self.coefficient.denominator)
            if self.pi_power:
                val *= _PI_100 ** self.pi_power
            if self.radicand != 1:
                val *= Decimal(self.radicand).sqrt()
            if self.sign < 0:
                val = -val
            ctx.prec = digits
            val = +val
        return str(val)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        coeff = self.coefficient
        if coeff != 1 or (self.pi_power == 0 and self.radicand == 1):
            parts.append(str(coeff) if coeff.denominator == 1 else f"({coeff})")
        if self.pi_power == 1:
            parts.append("pi")
        elif self.pi_power > 1:
            parts.append(f"pi^{self.pi_power}")
        if self.radicand != 1:
            parts.append(f"sqrt({self.radicand})")
        body = "*".join(parts)
        return f"-{body}" if self.sign < 0 else body


def canonicalize(value: SymbolicValue) -> SymbolicValue:
    """Square-free canonical form; idempotent."""
    return value.canonical()
