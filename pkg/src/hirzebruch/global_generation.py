"""Which characters have a globally generated general sheaf.

Covers ``F_e`` for ``e >= 1``, ``P^1 x P^1`` (``e = 0``, both rulings) and
``P^2``.  Verdicts carry the clause number that decided them so outputs can
be audited by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernCharacter, chi, chi_twist, discriminant, validate
from .errors import (
    NegativeDiscriminant,
    NonIntegralChi,
    NonNefSlope,
    NonPositiveMukaiRank,
    NonPositiveRank,
    RankTooSmall,
)
from .surface import DivisorClass, Surface, as_exact

_E = DivisorClass(1, 0)
_F = DivisorClass(0, 1)


@dataclass(frozen=True)
class GGVerdict:
    globally_generated: bool
    clause: int | None = None
    witness: tuple | None = None
    # on P^1 x P^1: which ruling ("F" or "E") the clause was checked against
    ruling: str | None = None
    reason: str = ""

    @property
    def verdict(self) -> str:
        return "GloballyGenerated" if self.globally_generated else "NotGloballyGenerated"


@dataclass(frozen=True)
class P2Character:
    """``(rank, d, ch2)`` on ``P^2`` with ``c1 = d H``."""

    rank: int
    d: int
    ch2: int | Fraction = 0

    def __post_init__(self):
        object.__setattr__(self, "ch2", as_exact(self.ch2))

    @property
    def mu(self):
        return as_exact(Fraction(self.d, self.rank))

    @property
    def delta(self):
        return as_exact(Fraction(self.mu) ** 2 / 2 - Fraction(self.ch2) / self.rank)

    @property
    def chi(self):
        return as_exact(self.ch2 + Fraction(3 * self.d, 2) + self.rank)

    def twist(self, n: int) -> P2Character:
        return P2Character(self.rank, self.d + n * self.rank,
                           self.ch2 + n * self.d + Fraction(self.rank * n * n, 2))

    def as_tuple(self):
        return (self.rank, self.d, self.ch2)

    def __str__(self):
        return f"({self.rank}, {self.d}H, {self.ch2})"

    def __sub__(self, other):
        return P2Character(self.rank - other.rank, self.d - other.d, self.ch2 - other.ch2)

    def __mul__(self, n):
        return P2Character(self.rank * n, self.d * n, self.ch2 * n)

    __rmul__ = __mul__


def ch_p2(n: int) -> P2Character:
    return P2Character(1, n, Fraction(n * n, 2))


def validate_p2(v: P2Character) -> P2Character:
    if v.rank < 1:
        raise NonPositiveRank(f"rank must be >= 1, got {v.rank}")
    if not isinstance(v.chi, int):
        raise NonIntegralChi(f"chi = {v.chi} is not an integer")
    return v


def _preconditions(rank, delta, nef, lenient):
    if rank < 2:
        raise RankTooSmall(f"rank {rank} < 2")
    if delta < 0:
        raise NegativeDiscriminant(f"discriminant {delta} < 0")
    if not nef:
        if lenient:
            return GGVerdict(False, reason="slope not nef; c1 of a globally generated bundle is nef")
        raise NonNefSlope("total slope is not nef, so no sheaf of this character is globally generated")
    return None


def pullback_witness(v: ChernCharacter, along: str = "F"):
    """``(a, m)`` with ``v = (r - m) ch O(aC) + m ch O((a+1)C)`` for the fiber class ``C``, or None.

    ``along="E"`` is only meaningful on ``P^1 x P^1`` where ``E`` is the other ruling.
    """
    r = v.rank
    n, other = (v.l, v.k) if along == "F" else (v.k, v.l)
    if other != 0 or v.ch2 != 0 or n < 0:
        return None
    return divmod(n, r)


def gg_hirzebruch(X: Surface, v: ChernCharacter, lenient: bool = False) -> GGVerdict:
    validate(X, v)
    nu = v.slope
    early = _preconditions(v.rank, discriminant(X, v), X.cone_position(nu).nef, lenient)
    if early is not None:
        return early
    if X.e == 0:
        return _gg_quadric(X, v)

    r, c = v.rank, chi(X, v)
    if X.dot_F(nu) == 0:
        w = pullback_witness(v)
        if w is not None:
            return GGVerdict(True, 1, witness=w)
        return GGVerdict(False, reason="nu.F = 0 but v is not pulled back from P^1")
    chi_mF = chi_twist(X, v, -_F)
    if chi_mF >= 0:
        return GGVerdict(True, 2)
    if c >= r + 2:
        return GGVerdict(True, 3)
    if X.e == 1 and c == r + 1 and v.as_tuple() == (r, 2, 2, -2):
        return GGVerdict(True, 4)
    return GGVerdict(False, reason=f"chi(v(-F)) = {chi_mF} < 0 and chi = {c} < r + 2")


def _gg_quadric(X: Surface, v: ChernCharacter) -> GGVerdict:
    r, c = v.rank, chi(X, v)
    nu = v.slope
    for ruling, C in (("F", _F), ("E", _E)):
        # intersection with the fiber class of this ruling
        if X.intersect(nu, C) == 0:
            w = pullback_witness(v, ruling)
            if w is not None:
                return GGVerdict(True, 1, witness=w, ruling=ruling)
            return GGVerdict(False, reason=f"nu.{ruling} = 0 but v is not pulled back from that ruling")
    for ruling, C in (("F", _F), ("E", _E)):
        if chi_twist(X, v, -C) >= 0:
            return GGVerdict(True, 2, ruling=ruling)
    if c >= r + 2:
        return GGVerdict(True, 3)
    return GGVerdict(False, reason=f"chi(v(-F)), chi(v(-E)) < 0 and chi = {c} < r + 2")


def gg_p2(v: P2Character, lenient: bool = False) -> GGVerdict:
    validate_p2(v)
    early = _preconditions(v.rank, v.delta, v.mu >= 0, lenient)
    if early is not None:
        return early
    r, c = v.rank, v.chi
    if v.mu == 0:
        if v.ch2 == 0:
            return GGVerdict(True, 1, witness=(0, 0))
        return GGVerdict(False, reason="mu = 0 but v is not r ch O")
    chi_m1 = v.twist(-1).chi
    if chi_m1 >= 0:
        return GGVerdict(True, 2)
    if c >= r + 2:
        return GGVerdict(True, 3)
    if c == r + 1 and v.as_tuple() == (r, 2, -2):
        return GGVerdict(True, 4)
    return GGVerdict(False, reason=f"chi(v(-1)) = {chi_m1} < 0 and chi = {c} < r + 2")


def lazarsfeld_mukai(X: Surface, v: ChernCharacter) -> ChernCharacter:
    """``chi(v) ch O - v``, the character of the kernel of the evaluation map."""
    validate(X, v)
    c = chi(X, v)
    if c <= v.rank:
        raise NonPositiveMukaiRank(f"chi = {c} <= rank = {v.rank}")
    return ChernCharacter(c - v.rank, -v.c1, -v.ch2)
