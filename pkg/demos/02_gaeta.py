"""Gaeta-type resolutions.

Finds the twist L for a few characters, shows the resolution, and then looks
at a character on P^1 x P^1 below the existence threshold that has none.
"""

from fractions import Fraction

from hirzebruch import ChernCharacter, DivisorClass, Infeasible, Surface, discriminant, feasible_twists, find_L
from hirzebruch.gaeta import certified_region, threshold

for e, v in [
    (2, ChernCharacter(2, DivisorClass(0, 0), -1)),
    (1, ChernCharacter(3, DivisorClass(1, 2), Fraction(-3, 2))),
    (0, ChernCharacter(2, DivisorClass(1, 1), -1)),
]:
    X = Surface(e)
    res = find_L(X, v)
    print(f"{X}, v = {v}, Delta = {discriminant(X, v)} (threshold {threshold(e)})")
    print(f"  L = {res.L}, exponents {res.exponents}, guaranteed = {res.guaranteed}")
    print(f"  {res.render(X)}")
    assert res.character(X) == v
    print(f"  other feasible twists in the search box: {len(feasible_twists(X, v)) - 1}")

X = Surface(0)
v = ChernCharacter(6, DivisorClass(3, 3), 1)
print(f"\n{X}, v = {v}, Delta = {discriminant(X, v)}")
try:
    find_L(X, v)
except Infeasible as exc:
    region = certified_region(X, v)
    print(f"  no resolution: {exc}")
    print(f"  certified = {exc.certified}; every feasible L would need x in {region.x_range}, and none works")
