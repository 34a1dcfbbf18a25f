"""Explicit prioritary models used to cross-check the Betti computation.

A model is a direct sum of twists of the four line bundles

    O(-E-(e+1)F), O(-E-eF), O(-F), O

followed by ``m`` elementary modifications at general points.  Its
cohomology is computed from line-bundle data only, independently of
:mod:`hirzebruch.betti`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chern import ChernCharacter, ch_line, chi, discriminant, point_modification, validate
from .errors import AmbiguousModification, NegativeDiscriminant
from .line_cohomology import BettiTriple, cohomology
from .surface import DivisorClass, Surface


def summand_classes(X: Surface) -> tuple:
    """The four building blocks, in the order used for :attr:`DirectSumModel.counts`."""
    e = X.e
    return (
        DivisorClass(-1, -(e + 1)),
        DivisorClass(-1, -e),
        DivisorClass(0, -1),
        DivisorClass(0, 0),
    )


@dataclass(frozen=True)
class DirectSumModel:
    L: DivisorClass
    counts: tuple
    m: int
    # "T1" (below the diagonal through (-1,-e-1) and (0,0)) or "T2"
    triangle: str

    @property
    def rank(self):
        return sum(self.counts)

    def summands(self, X: Surface):
        """``(line bundle class, multiplicity)`` pairs after twisting by ``L``."""
        return [(D + self.L, n) for D, n in zip(summand_classes(X), self.counts) if n]

    def unmodified_character(self, X: Surface) -> ChernCharacter:
        total = ChernCharacter(0, (0, 0), 0)
        for D, n in self.summands(X):
            total = total + n * ch_line(X, D)
        return total

    def character(self, X: Surface) -> ChernCharacter:
        return point_modification(self.unmodified_character(X), self.m)


def fundamental_twist(X: Surface, nu) -> DivisorClass:
    """The unique integral ``L`` with ``nu - L`` in the half-open parallelogram

        x in (-1, 0],  y in (e x - 1, e x].
    """
    nu = DivisorClass.coerce(nu)
    s = math.ceil(nu.a)
    x = nu.a - s
    t = math.ceil(nu.b - X.e * x)
    return DivisorClass(s, t)


def build_model(X: Surface, v: ChernCharacter) -> DirectSumModel:
    validate(X, v)
    if discriminant(X, v) < 0:
        raise NegativeDiscriminant(f"discriminant {discriminant(X, v)} < 0")
    e, r = X.e, v.rank
    L = fundamental_twist(X, v.slope)
    k, l = v.c1 - r * L  # c1(v(-L)); slope in the parallelogram
    if l <= (e + 1) * k:
        # O(-E-(e+1)F)^a + O(-F)^b + O^c
        a = -k
        b = (e + 1) * k - l
        counts = (a, 0, b, r - a - b)
        tri = "T1"
    else:
        # O^a + O(-E-eF)^b + O(-E-(e+1)F)^c
        c = e * k - l
        b = l - (e + 1) * k
        counts = (c, b, 0, r - b - c)
        tri = "T2"
    if min(counts) < 0:
        raise AssertionError(f"negative multiplicities {counts} for {v} on {X}")
    model = DirectSumModel(L, counts, 0, tri)
    m = chi(X, model.unmodified_character(X)) - chi(X, v)
    if m < 0:
        raise AssertionError(f"model has smaller chi than {v}")
    return DirectSumModel(L, counts, m, tri)


def predicted_betti(X: Surface, model: DirectSumModel) -> BettiTriple:
    """Cohomology of ``m`` general elementary modifications of the direct sum.

    Each modification either kills a section (when ``h1 = 0`` and there are
    sections) or adds one to ``h1``; ``h2`` never changes.

    The model is one point of the stack, so its cohomology bounds the general
    sheaf's from above with equal Euler characteristic.  That pins down the
    general value only when at most one group is nonzero, so no prediction is
    made when the direct sum has both ``h0`` and ``h1``, or when the result
    has both ``h1`` and ``h2``.
    """
    h0 = h1 = h2 = 0
    for D, n in model.summands(X):
        t = cohomology(X, D)
        h0, h1, h2 = h0 + n * t.h0, h1 + n * t.h1, h2 + n * t.h2
    if h0 and h1:
        raise AmbiguousModification(f"direct sum has h0={h0} and h1={h1}")
    drop = min(h0, model.m) if h1 == 0 else 0
    h0 -= drop
    h1 += model.m - drop
    if h1 and h2:
        raise AmbiguousModification(f"modified sum has h1={h1} and h2={h2}")
    return BettiTriple(h0, h1, h2, ("model",))
