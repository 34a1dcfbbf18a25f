"""Global generation and ampleness.

Classifies a few characters on F_1 and P^2, shows the Lazarsfeld-Mukai
character, and traces the Gieseker family across the ampleness bound.
"""

from hirzebruch import (
    ChernCharacter,
    DivisorClass,
    P2Character,
    Surface,
    ample_status,
    ample_status_p2,
    ch_p2,
    chi,
    gg_hirzebruch,
    gg_p2,
    gieseker_character,
    lazarsfeld_mukai,
    twist,
)

F1 = Surface(1)
for v in [
    ChernCharacter(2, DivisorClass(2, 2), -2),
    ChernCharacter(2, DivisorClass(0, 2), -1),
    ChernCharacter(3, DivisorClass(0, 4), 0),
    ChernCharacter(2, DivisorClass(2, 4), 0),
]:
    g = gg_hirzebruch(F1, v)
    print(f"{F1} {v}: chi = {chi(F1, v)} -> {g.verdict} clause={g.clause} {g.reason}")

v = ChernCharacter(2, DivisorClass(2, 2), -2)
print(f"\nLazarsfeld-Mukai character of {v}: {lazarsfeld_mukai(F1, v)}")

print()
for r in (2, 5):
    g = gg_p2(P2Character(r, 2, -2))
    print(f"P^2 ({r}, 2, -2): {g.verdict} clause={g.clause}")
coev = 10 * ch_p2(0) - ch_p2(-3)
g = gg_p2(coev)
print(f"P^2 {coev}: chi = {coev.chi} -> {g.verdict}; {g.reason}")

H = DivisorClass(1, 2)
w = twist(F1, ChernCharacter(2, DivisorClass(2, 2), -2), H)
st = ample_status(F1, w)
print(f"\nAmpleness of {w} on {F1}: {st.status} (clause {st.clause}, extended={st.extended})")

print("\nGieseker family on P^2, (*) is nu^2/2 > Delta/(r+1):")
for d in range(4, 10):
    st = ample_status_p2(gieseker_character(d))
    print(f"  d={d}: {st.star_lhs} vs {st.star_rhs} -> {'holds' if st.star_holds else 'fails'}; status {st.status}")
