"""Exact arithmetic in the golden field.

Every scalar in this package is a number ``a + b*tau`` with rational ``a``
and ``b``, where ``tau = (1 + sqrt 5)/2`` satisfies ``tau**2 = tau + 1``.
The field is closed under ring arithmetic, division and the conjugation
``tau -> sigma = 1 - tau``, so all geometry downstream (coordinates,
rotation matrices, volumes, predicates) stays exact and equality is
decidable structurally.

Rationals are kept in canonical reduced form by ``fractions.Fraction``;
arbitrary-precision integers mean repeated inflation never overflows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

RationalLike = Union[int, Fraction]
GoldenLike = Union[int, Fraction, "Golden"]

_TAU_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _sign_of(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


@total_ordering
class Golden:
    """An exact element ``a + b*tau`` of Q(tau)."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Golden is immutable")

    @classmethod
    def coerce(cls, x: GoldenLike) -> "Golden":
        if isinstance(x, Golden):
            return x
        return cls(_as_fraction(x))

    def __repr__(self) -> str:
        return f"Golden({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}t"
        return f"{self.a}{'+' if self.b > 0 else ''}{self.b}t"

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Golden.coerce(other)
        if isinstance(other, Golden):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Golden)):
            return (self - Golden.coerce(other)).sign() < 0
        return NotImplemented

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __neg__(self) -> "Golden":
        return Golden(-self.a, -self.b)

    def __add__(self, other: GoldenLike) -> "Golden":
        o = Golden.coerce(other)
        return Golden(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: GoldenLike) -> "Golden":
        o = Golden.coerce(other)
        return Golden(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: GoldenLike) -> "Golden":
        return Golden.coerce(other) - self

    def __mul__(self, other: GoldenLike) -> "Golden":
        o = Golden.coerce(other)
        # (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1
        return Golden(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Golden":
        """Exact multiplicative inverse."""
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Golden")
        c = self.conjugate_pair()
        return Golden(c.a / n, c.b / n)

    def __truediv__(self, other: GoldenLike) -> "Golden":
        return self * Golden.coerce(other).inverse()

    def __rtruediv__(self, other: GoldenLike) -> "Golden":
        return Golden.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Golden":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Golden":
        """Field conjugation tau -> sigma = 1 - tau: (a, b) -> (a + b, -b)."""
        return Golden(self.a + self.b, -self.b)

    # Alias used where the pairing with the inverse matters.
    conjugate_pair = conjugate

    def field_norm(self) -> Fraction:
        """x * conj(x) = a^2 + a*b - b^2, a rational."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Sign of the real number a + b*(1+sqrt5)/2, computed exactly.

        With u = 2a + b the number equals (u + b*sqrt5)/2.  When u and b
        agree in sign (or one vanishes) that sign wins; otherwise compare
        u^2 against 5*b^2 and let the larger magnitude decide.
        """
        u = 2 * self.a + self.b
        if self.b == 0:
            return _sign_of(u)
        if u == 0:
            return _sign_of(self.b)
        su = _sign_of(u)
        sb = _sign_of(self.b)
        if su == sb:
            return su
        return sb * _sign_of(5 * self.b * self.b - u * u)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _TAU_FLOAT

    def __abs__(self) -> "Golden":
        return -self if self.sign() < 0 else self

    def to_json(self) -> dict:
        """{"a": [num, den], "b": [num, den]} with den > 0 and gcd = 1."""
        return {
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Golden":
        an, ad = data["a"]
        bn, bd = data["b"]
        return cls(Fraction(an, ad), Fraction(bn, bd))


def fibonacci(n: int) -> int:
    """F(n) with F(0) = 0, F(1) = 1, extended to n < 0 by F(-n) = (-1)**(n+1) F(n)."""
    if n < 0:
        m = -n
        f = fibonacci(m)
        return f if m % 2 == 1 else -f
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def tau_power(n: int) -> Golden:
    """tau**n = F(n-1) + F(n)*tau, exactly, for any integer n."""
    return Golden(fibonacci(n - 1), fibonacci(n))


ZERO = Golden(0)
ONE = Golden(1)
HALF = Golden(Fraction(1, 2))
TAU = Golden(0, 1)
SIGMA = Golden(1, -1)  # 1 - tau, the algebraic conjugate of tau
TAU_INV = Golden(-1, 1)  # tau - 1 = 1/tau = -sigma
