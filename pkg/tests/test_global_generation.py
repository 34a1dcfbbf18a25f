from fractions import Fraction

import pytest
from hypothesis import given

from hirzebruch import (
    ChernCharacter,
    DivisorClass,
    NegativeDiscriminant,
    NonNefSlope,
    NonPositiveMukaiRank,
    P2Character,
    RankTooSmall,
    Surface,
    betti,
    ch_line,
    ch_p2,
    chi,
    discriminant,
    gg_hirzebruch,
    gg_p2,
    is_special,
    lazarsfeld_mukai,
    serre_dual,
    twist,
)
from hirzebruch.errors import InvalidCharacter

from conftest import chi_of_twist, delta_of, grid, hrr_chi, nonnegative_delta


def V(r, k, l, ch2):
    return ChernCharacter(r, DivisorClass(k, l), Fraction(ch2))


def p2_chi(r, d, ch2):
    # todd(P^2) = 1 + 3H/2 + pt
    return Fraction(ch2) + Fraction(3 * d, 2) + r


def p2_twist(r, d, ch2, n):
    return r, d + n * r, Fraction(ch2) + n * d + Fraction(r * n * n, 2)


def clauses_fe(X, v):
    """Which of the four clauses hold, computed from the definitions."""
    e, r = X.e, v.rank
    args = (e, r, v.k, v.l, v.ch2)
    c = hrr_chi(*args)
    nu_F = Fraction(v.k, r)
    c_mF = chi_of_twist(*args, (0, -1))
    return {
        1: v.k == 0 and v.ch2 == 0 and v.l >= 0,
        2: nu_F > 0 and c_mF >= 0,
        3: nu_F > 0 and c_mF < 0 and c >= r + 2,
        4: e == 1 and (r, v.k, v.l, v.ch2) == (r, 2, 2, -2) and nu_F > 0 and c_mF < 0 and c == r + 1,
    }


def test_clause_four_on_f1():
    X = Surface(1)
    for r in range(2, 11):
        v = V(r, 2, 2, -2)
        assert chi(X, v) == r + 1
        assert discriminant(X, v) == delta_of(1, r, 2, 2, -2) == Fraction(2 * (r + 1), r * r)
        assert X.cone_position(v.slope).nef
        assert chi_of_twist(1, r, 2, 2, -2, (0, -1)) < 0
        g = gg_hirzebruch(X, v)
        assert (g.verdict, g.clause) == ("GloballyGenerated", 4)
    # equals (r+1) O - O(-2E-2F)
    assert 3 * ch_line(X, (0, 0)) - ch_line(X, (-2, -2)) == V(2, 2, 2, -2)


def test_other_examples():
    g = gg_hirzebruch(Surface(2), V(3, 0, 3, 0))
    assert (g.clause, g.witness) == (1, (1, 0))
    g = gg_hirzebruch(Surface(1), V(2, 0, 2, -1))
    assert g.verdict == "NotGloballyGenerated"
    assert discriminant(Surface(1), V(2, 0, 2, -1)) == Fraction(1, 2)


def test_preconditions():
    with pytest.raises(RankTooSmall):
        gg_hirzebruch(Surface(1), V(1, 0, 1, 0))
    with pytest.raises(NegativeDiscriminant):
        gg_hirzebruch(Surface(1), V(2, 0, 2, 1))
    with pytest.raises(NonNefSlope):
        gg_hirzebruch(Surface(2), V(2, 2, 0, -4))
    lenient = gg_hirzebruch(Surface(2), V(2, 2, 0, -4), lenient=True)
    assert lenient.verdict == "NotGloballyGenerated"
    assert issubclass(NonNefSlope, InvalidCharacter)


def test_p2_examples():
    assert 4 * ch_p2(0) - ch_p2(-2) == P2Character(3, 2, -2)
    for r in range(2, 11):
        v = P2Character(r, 2, -2)
        assert v.chi == p2_chi(r, 2, -2) == r + 1
        g = gg_p2(v)
        assert (g.verdict, g.clause) == ("GloballyGenerated", 4)
    assert gg_p2(P2Character(2, 0, 0)).clause == 1
    # cokernel of O(-3) -> H^0(O(3))^* x O: rank 9, chi = r
    coev = 10 * ch_p2(0) - ch_p2(-3)
    assert coev == P2Character(9, 3, Fraction(-9, 2))
    assert coev.chi == 9
    assert gg_p2(coev).verdict == "NotGloballyGenerated"


def test_p2_twisted_euler_characteristic():
    for r in range(1, 5):
        for d in range(-6, 7):
            for twice in range(-12, 13):
                v = P2Character(r, d, Fraction(twice, 2))
                if p2_chi(r, d, v.ch2).denominator != 1:
                    continue
                for n in (-2, -1, 1, 3):
                    assert v.twist(n).chi == p2_chi(*p2_twist(r, d, v.ch2, n))
                assert v.twist(-1).chi == v.ch2 + Fraction(d, 2)


def test_p2_grid_clauses():
    for r in range(2, 6):
        for d in range(0, 9):
            for twice in range(-30, 10):
                ch2 = Fraction(twice, 2)
                if p2_chi(r, d, ch2).denominator != 1:
                    continue
                v = P2Character(r, d, ch2)
                if v.delta < 0:
                    continue
                g = gg_p2(v)
                c, c_m1 = p2_chi(r, d, ch2), p2_chi(*p2_twist(r, d, ch2, -1))
                expected = {
                    1: d == 0 and ch2 == 0,
                    2: d > 0 and c_m1 >= 0,
                    3: d > 0 and c_m1 < 0 and c >= r + 2,
                    4: d > 0 and c_m1 < 0 and c == r + 1 and (d, ch2) == (2, -2),
                }
                fired = [k for k, ok in expected.items() if ok]
                assert len(fired) <= 1
                assert g.globally_generated == bool(fired)
                if fired:
                    assert g.clause == fired[0]


def test_lazarsfeld_mukai():
    X = Surface(1)
    m = lazarsfeld_mukai(X, V(2, 2, 2, -2))
    assert m == V(1, -2, -2, 2)
    assert chi(X, m) == 0
    with pytest.raises(NonPositiveMukaiRank):
        lazarsfeld_mukai(X, V(2, 0, 0, 0))


@given(nonnegative_delta(min_rank=2))
def test_mukai_character_has_zero_chi(case):
    X, v = case
    if chi(X, v) <= v.rank:
        return
    m = lazarsfeld_mukai(X, v)
    assert chi(X, m) == 0
    assert m.rank == chi(X, v) - v.rank


def test_grid_classification():
    gg_count = 0
    for e in range(4):
        X = Surface(e)
        for v in grid(e):
            if v.rank < 2:
                continue
            g = gg_hirzebruch(X, v, lenient=True)
            if not g.globally_generated:
                continue
            gg_count += 1
            assert X.cone_position(v.c1).nef
            # gg implies nonspecial
            assert betti(X, v).triple.nonzero <= 1
            assert is_special(X, v).verdict == "Nonspecial"
            if e >= 1:
                fired = [k for k, ok in clauses_fe(X, v).items() if ok]
                assert fired == [g.clause]
            if g.clause == 3:
                mD = serre_dual(X, lazarsfeld_mukai(X, v))
                assert chi(X, mD) == 0
                assert chi(X, twist(X, mD, (0, -1))) < 0
                assert chi(X, twist(X, mD, (-1, 0))) <= 0
                if e >= 2:
                    assert chi(X, twist(X, mD, (-1, -1))) < 0
    assert gg_count > 1000


def test_not_gg_when_no_clause_holds():
    for e in range(1, 4):
        X = Surface(e)
        for v in grid(e, r_max=3, c_max=4, delta_max=2):
            if v.rank < 2 or not X.cone_position(v.slope).nef:
                continue
            g = gg_hirzebruch(X, v)
            assert g.globally_generated == any(clauses_fe(X, v).values())


def test_quadric_symmetry():
    X = Surface(0)
    for v in grid(0):
        if v.rank < 2 or not X.cone_position(v.slope).nef:
            continue
        swapped = V(v.rank, v.l, v.k, v.ch2)
        assert gg_hirzebruch(X, v).verdict == gg_hirzebruch(X, swapped).verdict


def test_quadric_rulings():
    X = Surface(0)
    g = gg_hirzebruch(X, V(2, 3, 0, 0))
    assert (g.clause, g.ruling, g.witness) == (1, "E", (1, 1))
    g = gg_hirzebruch(X, V(2, 0, 2, 0))
    assert (g.clause, g.ruling, g.witness) == (1, "F", (1, 0))
