"""Chern characters on ``F_e`` and their numerical invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonAmplePolarization, NonIntegralChi, NonPositiveRank
from .surface import DivisorClass, Surface, as_exact


@dataclass(frozen=True)
class ChernCharacter:
    """``(rank, c1, ch2)`` with ``c1 = kE + lF``.

    Any integer rank is representable so that characters form a group (the
    Gaeta and Lazarsfeld-Mukai constructions subtract characters).  Whether a
    value can come from a sheaf is decided by :func:`validate`.
    """

    rank: int
    c1: DivisorClass
    ch2: int | Fraction = 0

    def __post_init__(self):
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError(f"rank must be an int, got {self.rank!r}")
        object.__setattr__(self, "c1", DivisorClass.coerce(self.c1))
        object.__setattr__(self, "ch2", as_exact(self.ch2))

    @property
    def k(self):
        return self.c1.a

    @property
    def l(self):  # noqa: E743
        return self.c1.b

    @property
    def slope(self) -> DivisorClass:
        """Total slope ``nu = c1 / r``."""
        return self.c1 / self.rank

    nu = slope

    def __add__(self, other):
        return ChernCharacter(self.rank + other.rank, self.c1 + other.c1, self.ch2 + other.ch2)

    def __sub__(self, other):
        return ChernCharacter(self.rank - other.rank, self.c1 - other.c1, self.ch2 - other.ch2)

    def __neg__(self):
        return ChernCharacter(-self.rank, -self.c1, -self.ch2)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ChernCharacter(self.rank * n, self.c1 * n, self.ch2 * n)

    __rmul__ = __mul__

    def as_tuple(self):
        return (self.rank, self.k, self.l, self.ch2)

    def __str__(self):
        return f"({self.rank}, {self.c1}, {self.ch2})"


@dataclass(frozen=True)
class CharacterInvariants:
    nu: DivisorClass
    delta: int | Fraction
    chi: int
    mu_H: int | Fraction | None = None


def ch_line(X: Surface, D) -> ChernCharacter:
    """Character of the line bundle ``O(D)``: ``(1, D, D^2/2)``."""
    D = DivisorClass.coerce(D)
    return ChernCharacter(1, D, Fraction(X.square(D), 2))


def chi(X: Surface, v: ChernCharacter) -> int | Fraction:
    """Hirzebruch-Riemann-Roch: ``ch2 - c1.K/2 + r``.

    Returns a Fraction for characters that fail :func:`validate`.
    """
    return as_exact(v.ch2 - Fraction(X.intersect(v.c1, X.K), 2) + v.rank)


def discriminant(X: Surface, v: ChernCharacter) -> int | Fraction:
    nu = v.slope
    return as_exact(Fraction(X.square(nu), 2) - Fraction(v.ch2) / v.rank)


def validate(X: Surface, v: ChernCharacter) -> ChernCharacter:
    """Return ``v`` unchanged if it can be the character of a sheaf, else raise."""
    if v.rank < 1:
        raise NonPositiveRank(f"rank must be >= 1, got {v.rank}")
    if not v.c1.is_integral:
        raise NonIntegralChi(f"c1 = {v.c1} is not an integral class")
    x = chi(X, v)
    if not isinstance(x, int):
        raise NonIntegralChi(
            f"chi = {x} is not an integer (need ch2 - k*e/2 integral; k={v.k}, e={X.e}, ch2={v.ch2})"
        )
    return v


def P(X: Surface, nu) -> int | Fraction:
    """``chi(O) + nu.(nu - K)/2`` with ``chi(O) = 1``."""
    nu = DivisorClass.coerce(nu)
    return as_exact(1 + Fraction(X.intersect(nu, nu - X.K), 2))


def invariants(X: Surface, v: ChernCharacter, H=None) -> CharacterInvariants:
    validate(X, v)
    nu = v.slope
    delta = discriminant(X, v)
    chi_ = as_exact(v.rank * (P(X, nu) - delta))
    mu = None
    if H is not None:
        H = DivisorClass.coerce(H)
        if not X.cone_position(H).ample:
            raise NonAmplePolarization(f"{H} is not ample on {X}")
        mu = as_exact(Fraction(X.intersect(v.c1, H)) / (v.rank * X.square(H)))
    return CharacterInvariants(nu=nu, delta=delta, chi=chi_, mu_H=mu)


def twist(X: Surface, v: ChernCharacter, D) -> ChernCharacter:
    """``v . ch O(D)``."""
    D = DivisorClass.coerce(D)
    return ChernCharacter(
        v.rank,
        v.c1 + v.rank * D,
        v.ch2 + X.intersect(v.c1, D) + Fraction(v.rank * X.square(D), 2),
    )


def chi_twist(X: Surface, v: ChernCharacter, D) -> int:
    """``chi(v(D))`` from ``chi(v)`` alone, by ``chi + D.c1 + r(chi(D) - 1)``.

    Pure integer arithmetic for admissible ``v`` and integral ``D``; this is
    the hot path of the Gaeta search.
    """
    D = DivisorClass.coerce(D)
    return chi(X, v) + X.intersect(D, v.c1) + v.rank * (X.chi_line(D) - 1)


def dual(v: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(v.rank, -v.c1, v.ch2)


def serre_dual(X: Surface, v: ChernCharacter) -> ChernCharacter:
    """``v* (K)``; an involution preserving rank and discriminant."""
    return twist(X, dual(v), X.K)


def point_modification(v: ChernCharacter, times: int = 1) -> ChernCharacter:
    """Character after ``times`` elementary modifications at points."""
    return ChernCharacter(v.rank, v.c1, v.ch2 - times)
