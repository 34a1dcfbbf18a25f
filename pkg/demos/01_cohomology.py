"""Line bundles and general sheaves on F_e.

Walks through the intersection form, line-bundle cohomology, and the Betti
numbers of a general sheaf, printing each step.
"""

from hirzebruch import ChernCharacter, DivisorClass, Surface, betti, chi, cohomology, discriminant, is_special, serre_dual

X = Surface(2)
print(f"On {X}: K = {X.K}, K^2 = {X.square(X.K)}")

# The section E has negative self-intersection, so it is effective but not nef.
E = DivisorClass(1, 0)
print(f"E^2 = {X.square(E)}; cone position of E: {X.cone_position(E)}")

print("\nLine bundles O(aE + bF):")
for a, b in [(2, 3), (1, 0), (3, 1), (-3, 1), (-2, -5)]:
    t = cohomology(X, DivisorClass(a, b))
    print(f"  O({a}E{b:+d}F): h = {t.as_tuple()}  chi = {t.euler:3d}  via {' > '.join(t.trace)}")

print("\nGeneral sheaves:")
for v in [
    ChernCharacter(2, DivisorClass(0, 0), 0),
    ChernCharacter(2, DivisorClass(1, -1), -2),
    ChernCharacter(2, DivisorClass(2, 1), -1),
    ChernCharacter(3, DivisorClass(-7, 2), -24),
]:
    if discriminant(X, v) < 0:
        continue
    res = betti(X, v)
    sp = is_special(X, v)
    print(f"  v = {v}: Delta = {discriminant(X, v)}, chi = {chi(X, v)}")
    print(f"    h = {res.as_tuple()}  [{' > '.join(res.case_trace)}]  {sp.verdict} (clause {sp.clause})")

# Serre duality reverses the triple for rank >= 2.
v = ChernCharacter(2, DivisorClass(1, -1), -2)
print(f"\nSerre dual of {v} is {serre_dual(X, v)} with h = {betti(X, serre_dual(X, v)).as_tuple()}")
