"""
Exact arithmetic in a real quadratic field Q(sqrt N)

Values are stored as (a + b*sqrt(N)) / c with integer a, b, c and c > 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Union

import mpmath

Rational = Union[int, Fraction]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class FieldScalar:
    """
    Element of Q(sqrt N), N a fixed positive integer.

    A perfect-square N folds into the rational part, so `is_rational` is
    exact. Scalars with b = 0 mix freely with any N; two irrational scalars
    must share N.
    """

    __slots__ = ("_a", "_b", "_n", "_c")

    def __init__(self, a: int, b: int = 0, n: int = 2, c: int = 1) -> None:
        if c == 0:
            raise ZeroDivisionError("FieldScalar with zero denominator")
        if n <= 0:
            raise ValueError(f"radicand must be positive, got {n}")
        root = isqrt(n)
        if root * root == n:
            a, b = a + b * root, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        self._a = a
        self._b = b
        self._n = n
        self._c = c

    @classmethod
    def from_rational(cls, value: Rational, n: int = 2) -> FieldScalar:
        value = Fraction(value)
        return cls(value.numerator, 0, n, value.denominator)

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def n(self) -> int:
        return self._n

    @property
    def c(self) -> int:
        return self._c

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self._a, self._c)

    @property
    def surd_part(self) -> Fraction:
        return Fraction(self._b, self._c)

    def __repr__(self) -> str:
        return f"FieldScalar({self._a}, {self._b}, {self._n}, {self._c})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(Fraction(self._a, self._c))
        body = f"{self._a}{self._b:+}*sqrt({self._n})"
        return body if self._c == 1 else f"({body})/{self._c}"

    def __float__(self) -> float:
        return float(self.to_mpf())

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps):
            return (mpmath.mpf(self._a) + self._b * mpmath.sqrt(self._n)) / self._c

    def _coerce(self, other) -> FieldScalar | None:
        if isinstance(other, FieldScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldScalar.from_rational(other, self._n)
        return None

    def _radicand(self, other: FieldScalar) -> int:
        if self._b == 0:
            return other._n
        if other._b == 0 or other._n == self._n:
            return self._n
        raise ValueError(f"cannot mix sqrt({self._n}) and sqrt({other._n})")

    def sign(self) -> int:
        """Exact sign, from a^2 against b^2 N when a and b disagree"""
        a, b = self._a, self._b
        if b == 0:
            return _sign(a)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        diff = a * a - b * b * self._n
        return _sign(diff) if a > 0 else -_sign(diff)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._b == 0 and other._b == 0:
            return self._a * other._c == other._a * self._c
        return (self._a, self._b, self._n, self._c) == (other._a, other._b, other._n, other._c)

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._c))
        return hash((self._a, self._b, self._n, self._c))

    def __neg__(self) -> FieldScalar:
        return FieldScalar(-self._a, -self._b, self._n, self._c)

    def __abs__(self) -> FieldScalar:
        return -self if self.sign() < 0 else self

    def __add__(self, other) -> FieldScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self._radicand(other)
        return FieldScalar(
            self._a * other._c + other._a * self._c,
            self._b * other._c + other._b * self._c,
            n,
            self._c * other._c,
        )

    def __radd__(self, other) -> FieldScalar:
        return self + other

    def __sub__(self, other) -> FieldScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> FieldScalar:
        return (-self) + other

    def __mul__(self, other) -> FieldScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self._radicand(other)
        return FieldScalar(
            self._a * other._a + self._b * other._b * n,
            self._a * other._b + self._b * other._a,
            n,
            self._c * other._c,
        )

    def __rmul__(self, other) -> FieldScalar:
        return self * other

    def conjugate(self) -> FieldScalar:
        return FieldScalar(self._a, -self._b, self._n, self._c)

    def __truediv__(self, other) -> FieldScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero in Q(sqrt N)")
        # x / y = x * conj(y) * c_y / (a_y^2 - b_y^2 N)
        norm = other._a * other._a - other._b * other._b * self._radicand(other)
        return self * other.conjugate() * FieldScalar(other._c * other._c, 0, self._n, norm)

    def __rtruediv__(self, other) -> FieldScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __floor__(self) -> int:
        return self.floor()

    def floor(self) -> int:
        """Exact floor, using isqrt(b^2 N) for the surd"""
        a, b, c = self._a, self._b, self._c
        if b == 0:
            return a // c
        root = isqrt(b * b * self._n)
        if b > 0:
            return (a + root) // c
        return (a - root - 1) // c

    def mod(self, period: Rational, low: Rational = 0) -> FieldScalar:
        """Representative of self modulo `period` in [low, low + period)"""
        period = Fraction(period)
        shifted = (self - low) / period
        return self - period * shifted.floor()
