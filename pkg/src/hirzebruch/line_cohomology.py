"""Cohomology of line bundles ``O(aE + bF)`` on ``F_e``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .surface import DivisorClass, Surface


@dataclass(frozen=True)
class BettiTriple:
    h0: int
    h1: int
    h2: int
    # case labels, in the order they were applied; not part of equality
    trace: tuple = field(default=(), compare=False)

    def __iter__(self):
        yield self.h0
        yield self.h1
        yield self.h2

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    @property
    def nonzero(self) -> int:
        return sum(1 for h in self if h)

    def reversed(self, label=None) -> BettiTriple:
        trace = ((label,) if label else ()) + self.trace
        return BettiTriple(self.h2, self.h1, self.h0, trace)

    def as_tuple(self):
        return (self.h0, self.h1, self.h2)


def cohomology(X: Surface, D) -> BettiTriple:
    """``(h0, h1, h2)`` of ``O(D)``, following the case analysis by ``D.F`` and ``D.E``.

    ``D.F < -1`` is handled by one trip through Serre duality; ``D.E < -1``
    walks down ``D - E, D - 2E, ...`` until the class is either anti-effective
    along fibers or has ``.E >= -1``.
    """
    D = DivisorClass.coerce(D)
    chi = X.chi_line(D)
    df = X.dot_F(D)
    if df == -1:
        return BettiTriple(0, -chi, 0, ("F-1",))
    if df < -1:
        return cohomology(X, X.K - D).reversed("SerreDual")
    if X.dot_E(D) >= -1:
        return BettiTriple(chi, 0, 0, ("E-ok",))
    m = 1
    while True:
        Dm = D - m * DivisorClass(1, 0)
        if X.dot_F(Dm) <= -1:
            h0, tail = 0, "F-low"
            break
        if X.dot_E(Dm) >= -1:
            h0, tail = X.chi_line(Dm), "E-ok"
            break
        m += 1
    return BettiTriple(h0, h0 - chi, 0, (f"E-induct(m={m})", tail))


def h0_sections(X: Surface, D) -> int:
    """``h0(O(aE+bF)) = sum_{i=0..a} max(0, b - ie + 1)``, by pushing forward to P^1."""
    a, b = DivisorClass.coerce(D)
    if a < 0:
        return 0
    return sum(max(0, b - i * X.e + 1) for i in range(a + 1))


def cohomology_oracle(X: Surface, D) -> BettiTriple:
    """Independent route: count sections directly, Serre duality for h2, chi for h1."""
    D = DivisorClass.coerce(D)
    h0 = h0_sections(X, D)
    h2 = h0_sections(X, X.K - D)
    return BettiTriple(h0, h0 + h2 - X.chi_line(D), h2, ("oracle",))
