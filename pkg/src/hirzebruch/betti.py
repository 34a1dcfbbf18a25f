"""Betti numbers of a general prioritary sheaf, and the speciality classification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .chern import ChernCharacter, chi, chi_twist, discriminant, serre_dual, validate
from .errors import NegativeDiscriminant, UnsupportedRankOne
from .line_cohomology import BettiTriple, cohomology
from .surface import DivisorClass, Surface

_E = DivisorClass(1, 0)


@dataclass(frozen=True)
class BettiResult:
    triple: BettiTriple
    case_trace: tuple = ()
    m: int | None = None

    @property
    def h0(self):
        return self.triple.h0

    @property
    def h1(self):
        return self.triple.h1

    @property
    def h2(self):
        return self.triple.h2

    def as_tuple(self):
        return self.triple.as_tuple()


@dataclass(frozen=True)
class SpecialityVerdict:
    special: bool
    clause: str
    m: int | None = None
    # set when the verdict was read off the Serre dual character
    via_serre_dual: bool = field(default=False)

    @property
    def verdict(self) -> str:
        return "Special" if self.special else "Nonspecial"


def _check(X: Surface, v: ChernCharacter):
    validate(X, v)
    # Delta >= 0  <=>  c1^2 >= 2 r ch2
    if X.square(v.c1) < 2 * v.rank * v.ch2:
        raise NegativeDiscriminant(f"discriminant {discriminant(X, v)} < 0; no prioritary sheaves")


def induction_depth(nu_F, nu_E, e: int) -> int:
    """Smallest ``m >= 1`` with ``nu.F - m <= -1`` or ``nu.E + m e >= -1``.

    Twisting by ``-E`` lowers ``nu.F`` by one and raises ``nu.E`` by ``e``.
    For ``e = 0`` only the first condition can ever trigger.
    """
    m = max(1, math.ceil(nu_F + 1))
    if e > 0:
        m = min(m, max(1, math.ceil((-1 - nu_E) / e)))
    return m


def _depth(r, kF, kE, e):
    """:func:`induction_depth` for ``nu.F = kF / r`` and ``nu.E = kE / r``."""
    m = max(1, -((-(kF + r)) // r))
    if e > 0:
        m = min(m, max(1, -((kE + r) // (e * r))))
    return m


def _slopes(X, v):
    # r * nu.F and r * nu.E, both integers
    return v.k, v.l - X.e * v.k


def betti(X: Surface, v: ChernCharacter) -> BettiResult:
    """Cohomology ``(h0, h1, h2)`` of a general sheaf of character ``v``.

    Requires an admissible ``v`` with nonnegative discriminant.  Characters
    with ``nu.F < -1`` are reduced to their Serre dual (rank >= 2) or, for
    line bundles, to :func:`~hirzebruch.line_cohomology.cohomology`.
    """
    _check(X, v)
    r = v.rank
    c = chi(X, v)
    kF, kE = _slopes(X, v)

    if kF == -r:
        return BettiResult(BettiTriple(0, -c, 0), ("ChiFormula", "F-1"))

    if kF < -r:
        if r >= 2:
            dual = betti(X, serre_dual(X, v))
            return BettiResult(dual.triple.reversed(), ("SerreDual",) + dual.case_trace, dual.m)
        if discriminant(X, v) == 0:
            lb = cohomology(X, v.c1)
            return BettiResult(BettiTriple(*lb), ("LineBundle",) + lb.trace)
        raise UnsupportedRankOne(
            f"rank 1 with discriminant {discriminant(X, v)} > 0 and nu.F = {kF} < -1"
        )

    if kE >= -r:
        return BettiResult(BettiTriple(max(c, 0), max(-c, 0), 0), ("ChiFormula", "E-ok"))

    m = _depth(r, kF, kE, X.e)
    step = f"E-induct(m={m})"
    if kF - m * r <= -r:
        return BettiResult(BettiTriple(0, -c, 0), ("ChiFormula", step, "F-low"), m)
    h0 = max(chi_twist(X, v, DivisorClass(-m, 0)), 0)
    return BettiResult(BettiTriple(h0, h0 - c, 0), ("ChiFormula", step, "E-ok"), m)


def is_special(X: Surface, v: ChernCharacter) -> SpecialityVerdict:
    """Whether the general sheaf of character ``v`` has two or more nonzero cohomology groups.

    Clause labels: ``"1"`` (``nu.F = -1``), ``"2"`` (``nu.E >= -1``),
    ``"3a"``/``"3b"`` (the inductive case).  For ``nu.F < -1`` the verdict of
    the Serre dual character is returned with ``via_serre_dual`` set.
    """
    _check(X, v)
    r = v.rank
    kF, kE = _slopes(X, v)

    if kF < -r:
        if r == 1 and discriminant(X, v) > 0:
            raise UnsupportedRankOne(
                f"rank 1 with discriminant {discriminant(X, v)} > 0 and nu.F = {kF} < -1"
            )
        inner = is_special(X, serre_dual(X, v))
        return SpecialityVerdict(inner.special, inner.clause, inner.m, via_serre_dual=True)

    if kF == -r:
        return SpecialityVerdict(False, "1")
    if kE >= -r:
        return SpecialityVerdict(False, "2")

    m = _depth(r, kF, kE, X.e)
    if kF - m * r <= -r:
        return SpecialityVerdict(False, "3a", m)
    return SpecialityVerdict(chi_twist(X, v, DivisorClass(-m, 0)) > 0, "3b", m)
