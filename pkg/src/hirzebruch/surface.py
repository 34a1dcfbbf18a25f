"""The Picard lattice of a Hirzebruch surface.

Divisors are written in the basis ``aE + bF`` where ``F`` is the class of a
fiber and ``E`` the section with ``E^2 = -e``.  Coefficients are exact
(``int`` or :class:`fractions.Fraction`); nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple


def as_exact(x) -> int | Fraction:
    """Coerce ``x`` to an exact rational, collapsing integral fractions to int."""
    t = type(x)
    if t is int:
        return x
    if t is Fraction:
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return int(x)
    if isinstance(x, (Fraction, Rational)):
        x = Fraction(x)
    elif isinstance(x, str):
        x = Fraction(x.strip().replace("−", "-"))
    else:
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class DivisorClass:
    """The class ``aE + bF``; coefficients may be rational (slopes live here too)."""

    a: int | Fraction = 0
    b: int | Fraction = 0

    def __post_init__(self):
        object.__setattr__(self, "a", as_exact(self.a))
        object.__setattr__(self, "b", as_exact(self.b))

    @classmethod
    def coerce(cls, D) -> DivisorClass:
        if isinstance(D, cls):
            return D
        a, b = D
        return cls(a, b)

    @property
    def is_integral(self) -> bool:
        return isinstance(self.a, int) and isinstance(self.b, int)

    def __iter__(self):
        yield self.a
        yield self.b

    def __add__(self, other):
        other = DivisorClass.coerce(other)
        return DivisorClass(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = DivisorClass.coerce(other)
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return DivisorClass.coerce(other) - self

    def __neg__(self):
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, c):
        c = as_exact(c)
        return DivisorClass(self.a * c, self.b * c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(as_exact(c))
        return DivisorClass(self.a / c, self.b / c)

    def __str__(self):
        return f"{self.a}E{'+' if self.b >= 0 else '-'}{abs(self.b)}F"


# Alias for readability where a slope, not a line bundle, is meant.
RationalDivisorClass = DivisorClass

E = DivisorClass(1, 0)
F = DivisorClass(0, 1)
ZERO = DivisorClass(0, 0)


class ConePosition(NamedTuple):
    effective: bool
    nef: bool
    ample: bool


@dataclass(frozen=True)
class Surface:
    """The Hirzebruch surface ``F_e``."""

    e: int

    def __post_init__(self):
        if not isinstance(self.e, int) or isinstance(self.e, bool) or self.e < 0:
            raise ValueError(f"Hirzebruch parameter must be a nonnegative integer, got {self.e!r}")

    @property
    def K(self) -> DivisorClass:
        """Canonical class ``-2E - (e+2)F``."""
        return DivisorClass(-2, -(self.e + 2))

    def canonical_class(self) -> DivisorClass:
        return self.K

    def intersect(self, D1, D2) -> int | Fraction:
        D1 = DivisorClass.coerce(D1)
        D2 = DivisorClass.coerce(D2)
        return as_exact(-self.e * D1.a * D2.a + D1.a * D2.b + D2.a * D1.b)

    def square(self, D) -> int | Fraction:
        return self.intersect(D, D)

    def dot_E(self, D) -> int | Fraction:
        D = DivisorClass.coerce(D)
        return as_exact(D.b - self.e * D.a)

    def dot_F(self, D) -> int | Fraction:
        return DivisorClass.coerce(D).a

    def cone_position(self, D) -> ConePosition:
        D = DivisorClass.coerce(D)
        de, df = self.dot_E(D), self.dot_F(D)
        return ConePosition(
            effective=D.a >= 0 and D.b >= 0,
            nef=de >= 0 and df >= 0,
            ample=de > 0 and df > 0,
        )

    def chi_line(self, D) -> int:
        """Euler characteristic of ``O(aE + bF)``; needs an integral class."""
        D = DivisorClass.coerce(D)
        if not D.is_integral:
            raise ValueError(f"{D} is not an integral divisor class")
        a, b = D.a, D.b
        # a(a+1) is even, so the division is exact
        return (a + 1) * (b + 1) - self.e * (a * (a + 1) // 2)

    def __str__(self):
        return f"F_{self.e}"
