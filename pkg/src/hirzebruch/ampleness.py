"""Necessary tests and sufficient certificates for ampleness of a general bundle.

There is no complete classification, so :class:`AmpleStatus` is tri-state and
``Unknown`` is a legitimate answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernCharacter, ch_line, chi_twist, discriminant, twist, validate
from .errors import HirzebruchError, NegativeDiscriminant, RankTooSmall
from .global_generation import P2Character, ch_p2, gg_hirzebruch, gg_p2, validate_p2
from .surface import DivisorClass, Surface, as_exact

NECESSARY_FAILED = "NecessaryFailed"
SUFFICIENT = "Sufficient"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class AmpleStatus:
    status: str
    star_lhs: int | Fraction
    star_rhs: int | Fraction
    clause: int | None = None
    reason: str = ""
    # certificate obtained by the same twist-then-gg argument on F_0, F_1 or P^2
    extended: bool = False

    @property
    def star_holds(self) -> bool:
        return self.star_lhs > self.star_rhs


def polarization(X: Surface) -> DivisorClass:
    """``H = E + (e+1)F``, the twist used for the sufficient test."""
    return DivisorClass(1, X.e + 1)


def _star(nu_sq, delta, r):
    return as_exact(Fraction(nu_sq) / 2), as_exact(Fraction(delta) / (r + 1))


def _pre(rank, delta):
    if rank < 2:
        raise RankTooSmall(f"rank {rank} < 2")
    if delta < 0:
        raise NegativeDiscriminant(f"discriminant {delta} < 0")


def ample_status(X: Surface, v: ChernCharacter) -> AmpleStatus:
    validate(X, v)
    delta = discriminant(X, v)
    _pre(v.rank, delta)
    nu = v.slope
    lhs, rhs = _star(X.square(nu), delta, v.rank)

    failed = []
    if X.dot_E(nu) < 1:
        failed.append(f"nu.E = {X.dot_E(nu)} < 1")
    if X.dot_F(nu) < 1:
        failed.append(f"nu.F = {X.dot_F(nu)} < 1")
    if not lhs > rhs:
        failed.append(f"nu^2/2 = {lhs} <= Delta/(r+1) = {rhs}")
    if failed:
        return AmpleStatus(NECESSARY_FAILED, lhs, rhs, reason="; ".join(failed))

    w = twist(X, v, -polarization(X))
    try:
        gg = gg_hirzebruch(X, w)
    except HirzebruchError as exc:
        return AmpleStatus(UNKNOWN, lhs, rhs, reason=f"gg test on v(-H) not applicable: {exc}")
    if gg.globally_generated:
        return AmpleStatus(SUFFICIENT, lhs, rhs, clause=gg.clause,
                           reason="v(-H) is globally generated", extended=X.e <= 1)
    return AmpleStatus(UNKNOWN, lhs, rhs, reason="necessary tests pass but v(-H) is not globally generated")


def explicit_ample_clause(X: Surface, v: ChernCharacter) -> int | None:
    """The explicit sufficient conditions on ``F_e``, ``e >= 2``, stated directly in ``v``.

    Assumes ``rank >= 2``, ``Delta >= 0``, ``nu.E >= 1`` and ``nu.F >= 1``.
    Returns the clause (1, 2 or 3) that certifies ampleness, or None.
    """
    if X.e < 2:
        raise ValueError("explicit clauses are stated for e >= 2 only")
    e, r = X.e, v.rank
    nu_F = X.dot_F(v.slope)
    if nu_F == 1:
        # v = (r-m) ch O(E+(e+a+1)F) + m ch O(E+(e+a+2)F)
        n = v.l - r * (e + 1)
        if v.k != r or n < 0:
            return None
        a, m = divmod(n, r)
        target = (r - m) * ch_line(X, DivisorClass(1, e + a + 1)) + m * ch_line(X, DivisorClass(1, e + a + 2))
        return 1 if target == v else None
    if nu_F > 1:
        if chi_twist(X, v, DivisorClass(-1, -(e + 2))) >= 0:
            return 2
        if chi_twist(X, v, DivisorClass(-1, -(e + 1))) >= r + 2:
            return 3
    return None


def ample_status_p2(v: P2Character) -> AmpleStatus:
    validate_p2(v)
    _pre(v.rank, v.delta)
    lhs, rhs = _star(Fraction(v.mu) ** 2, v.delta, v.rank)
    failed = []
    if v.mu < 1:
        failed.append(f"mu = {v.mu} < 1")
    if not lhs > rhs:
        failed.append(f"nu^2/2 = {lhs} <= Delta/(r+1) = {rhs}")
    if failed:
        return AmpleStatus(NECESSARY_FAILED, lhs, rhs, reason="; ".join(failed))
    try:
        gg = gg_p2(v.twist(-1))
    except HirzebruchError as exc:
        return AmpleStatus(UNKNOWN, lhs, rhs, reason=f"gg test on v(-1) not applicable: {exc}")
    if gg.globally_generated:
        return AmpleStatus(SUFFICIENT, lhs, rhs, clause=gg.clause,
                           reason="v(-1) is globally generated", extended=True)
    return AmpleStatus(UNKNOWN, lhs, rhs, reason="necessary tests pass but v(-1) is not globally generated")


def gieseker_character(d: int) -> P2Character:
    """Character of the cokernel of ``O(-d)^2 -> O(-1)^4`` on ``P^2``."""
    return 4 * ch_p2(-1) - 2 * ch_p2(-d)
