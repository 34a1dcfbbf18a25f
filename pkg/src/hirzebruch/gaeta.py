"""Gaeta-type resolutions

    0 -> L(-E-(e+1)F)^alpha -> L(-E-eF)^beta + L(-F)^gamma + L^delta -> V -> 0.

The exponents are forced by ``v`` and ``L``; the work is finding an integral
``L`` for which all four are nonnegative.  For fixed ``L.E``-coordinate ``x``
every exponent is an affine function of the ``F``-coordinate ``y`` with
integer coefficients, so each column of the search region is solved exactly
rather than scanned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernCharacter, ch_line, chi, chi_twist, discriminant, validate
from .errors import Infeasible, NegativeDiscriminant
from .surface import DivisorClass, Surface

_E = DivisorClass(1, 0)
_F = DivisorClass(0, 1)


def resolution_terms(X: Surface, L) -> dict:
    """The four line bundles of an ``L``-Gaeta resolution, keyed by exponent name."""
    L = DivisorClass.coerce(L)
    e = X.e
    return {
        "alpha": L + DivisorClass(-1, -(e + 1)),
        "beta": L + DivisorClass(-1, -e),
        "gamma": L + DivisorClass(0, -1),
        "delta": L,
    }


@dataclass(frozen=True)
class GaetaResolution:
    L: DivisorClass
    alpha: int
    beta: int
    gamma: int
    delta: int
    guaranteed: bool

    @property
    def exponents(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def rank(self):
        return self.beta + self.gamma + self.delta - self.alpha

    def character(self, X: Surface) -> ChernCharacter:
        """The alternating sum of the terms; equals ``v`` for a genuine resolution."""
        t = resolution_terms(X, self.L)
        return (
            self.beta * ch_line(X, t["beta"])
            + self.gamma * ch_line(X, t["gamma"])
            + self.delta * ch_line(X, t["delta"])
            - self.alpha * ch_line(X, t["alpha"])
        )

    def render(self, X: Surface) -> str:
        t = resolution_terms(X, self.L)

        def O(D, n):
            return f"O({D.a}E{D.b:+d}F)^{n}"

        middle = " + ".join(O(t[k], getattr(self, k)) for k in ("beta", "gamma", "delta"))
        return f"0 -> {O(t['alpha'], self.alpha)} -> {middle} -> V -> 0"


@dataclass(frozen=True)
class SearchRegion:
    """Integral twists ``L = xE + yF`` examined by the search.

    ``center`` is ``nu - K/2``, the center of the hyperbola
    ``chi(v(-L)) = 0``; its asymptotes are the vertical line through the
    center and the line of slope ``asymptote_slope``.  ``y_range`` is None
    when columns are solved without a vertical cap.
    """

    center: DivisorClass
    asymptote_slope: Fraction
    x_range: tuple
    y_range: tuple | None
    certified: bool

    @property
    def size(self):
        nx = self.x_range[1] - self.x_range[0] + 1
        if self.y_range is None:
            return None
        return max(nx, 0) * (self.y_range[1] - self.y_range[0] + 1)


def threshold(e: int) -> Fraction:
    """Discriminant above which a resolution always exists on ``F_e``."""
    return {0: Fraction(1, 4), 1: Fraction(1, 8)}.get(e, Fraction(0))


def is_guaranteed(X: Surface, v: ChernCharacter) -> bool:
    return discriminant(X, v) >= threshold(X.e)


def exponents(X: Surface, v: ChernCharacter, L) -> tuple:
    """``(alpha, beta, gamma, delta)``; negative entries mean ``L`` is not feasible."""
    validate(X, v)
    L = DivisorClass.coerce(L)
    return (
        -chi_twist(X, v, -L - _E - _F),
        -chi_twist(X, v, -L - _E),
        -chi_twist(X, v, -L - _F),
        chi_twist(X, v, -L),
    )


def is_feasible(X: Surface, v: ChernCharacter, L) -> bool:
    return all(n >= 0 for n in exponents(X, v, L))


def _ceil_div(p, q):
    return -((-p) // q)


def _column(X: Surface, v: ChernCharacter, x: int, chi_v: int | None = None):
    """Integer ``y``-interval ``(lo, hi)`` of feasible ``L = xE + yF``; None bounds are infinite.

    Returns None if the column is empty.
    """
    e, r, k, l = X.e, v.rank, v.k, v.l
    if chi_v is None:
        chi_v = chi(X, v)
    lo, hi = None, None
    for sa, sb, sign in ((1, 1, -1), (1, 0, -1), (0, 1, -1), (0, 0, 1)):
        # D = -L - (sa E + sb F) = a E + b F with b = b0 - y
        a, b0 = -x - sa, -sb
        # chi(v(D)) = chi_v + D.c1 + r (chi(O(D)) - 1), affine in y
        c = chi_v - e * a * k + a * l + b0 * k + r * ((a + 1) * (b0 + 1) - e * (a * (a + 1) // 2) - 1)
        c *= sign
        s = -sign * (k + r * (a + 1))
        if s > 0:
            bound = _ceil_div(-c, s)
            lo = bound if lo is None else max(lo, bound)
        elif s < 0:
            bound = c // (-s)
            hi = bound if hi is None else min(hi, bound)
        elif c < 0:
            return None
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def _ceil_sqrt(q) -> int:
    """Smallest integer ``t >= 0`` with ``t*t >= q`` for rational ``q >= 0``."""
    q = Fraction(q)
    t = math.isqrt(q.numerator // q.denominator)
    while t * t < q:
        t += 1
    return t


def _center(X, v):
    return v.slope - Fraction(1, 2) * X.K


def search_box(X: Surface, v: ChernCharacter) -> SearchRegion:
    """Square box around ``nu`` of half-width ``ceil(2 + 2 sqrt(max(Delta, 1)))``."""
    delta = discriminant(X, v)
    C = 2 + _ceil_sqrt(4 * max(Fraction(delta), Fraction(1)))
    nu = v.slope
    xr = (math.floor(nu.a) - C, math.ceil(nu.a) + C)
    yr = (math.floor(nu.b) - C, math.ceil(nu.b) + C)
    return SearchRegion(_center(X, v), Fraction(X.e, 2), xr, yr, certified=False)


def certified_region(X: Surface, v: ChernCharacter) -> SearchRegion:
    """A region containing every feasible ``L`` when the discriminant is positive.

    With ``p = (nu - K/2 - L).E-coefficient`` feasibility forces ``p > 0``;
    for ``p > 1`` it also forces ``p(p-1) <= 2 Delta / e`` when ``e >= 1``, and
    ``p <= 1 + Delta / q_min`` when ``e = 0``, where ``q_min`` is the least
    positive value of the matching ``F``-offset on the shifted lattice.  Each
    column is then a bounded interval.
    """
    delta = Fraction(discriminant(X, v))
    if delta <= 0:
        raise ValueError("no finite certified region when the discriminant is 0")
    cx = _center(X, v).a
    if X.e >= 1:
        P = 1 + _ceil_sqrt(2 * delta / X.e)
    else:
        frac = Fraction(v.slope.b) % 1
        q_min = frac if frac else Fraction(1)
        P = 1 + delta / q_min
    x_hi = math.ceil(cx) - 1
    x_lo = math.ceil(cx - P)
    return SearchRegion(_center(X, v), Fraction(X.e, 2), (x_lo, x_hi), None, certified=True)


def feasible_twists(X: Surface, v: ChernCharacter, region: SearchRegion | None = None) -> list:
    """Every feasible ``L`` in the region, in lexicographic order."""
    validate(X, v)
    region = region or search_box(X, v)
    out = []
    chi_v = chi(X, v)
    for x in range(region.x_range[0], region.x_range[1] + 1):
        col = _column(X, v, x, chi_v)
        if col is None:
            continue
        lo, hi = _clip(col, region)
        out.extend(DivisorClass(x, y) for y in range(lo, hi + 1))
    return out


def _clip(col, region):
    lo, hi = col
    if region.y_range is not None:
        lo = region.y_range[0] if lo is None else max(lo, region.y_range[0])
        hi = region.y_range[1] if hi is None else min(hi, region.y_range[1])
    elif lo is None or hi is None:
        raise AssertionError("unbounded column inside a certified region")
    return lo, hi


def _first(X, v, region):
    chi_v = chi(X, v)
    for x in range(region.x_range[0], region.x_range[1] + 1):
        col = _column(X, v, x, chi_v)
        if col is None:
            continue
        lo, hi = _clip(col, region)
        if lo <= hi:
            return DivisorClass(x, lo)
    return None


def find_L(X: Surface, v: ChernCharacter) -> GaetaResolution:
    """Lexicographically smallest feasible twist in the search box.

    If the box is empty and the discriminant is positive, the certified region
    is searched as well, so :class:`~hirzebruch.errors.Infeasible` with
    ``certified=True`` is a proof that no Gaeta-type resolution exists.
    """
    validate(X, v)
    delta = discriminant(X, v)
    if delta < 0:
        raise NegativeDiscriminant(f"discriminant {delta} < 0")
    guaranteed = is_guaranteed(X, v)

    region = search_box(X, v)
    L = _first(X, v, region)
    if L is None and delta > 0:
        region = certified_region(X, v)
        L = _first(X, v, region)
    if L is None:
        if guaranteed:
            raise RuntimeError(f"no feasible twist for {v} on {X} although Delta={delta} meets the threshold")
        raise Infeasible(
            f"no line bundle L satisfies the Gaeta inequalities for {v} on {X}",
            guaranteed=guaranteed,
            certified=region.certified,
            region=region,
        )
    a, b, c, d = exponents(X, v, L)
    return GaetaResolution(L, a, b, c, d, guaranteed)
