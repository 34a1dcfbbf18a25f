from fractions import Fraction

import pytest
from hypothesis import given

from hirzebruch import (
    ChernCharacter,
    DivisorClass,
    NonAmplePolarization,
    NonIntegralChi,
    NonPositiveRank,
    Surface,
    ch_line,
    chi,
    chi_twist,
    discriminant,
    invariants,
    point_modification,
    serre_dual,
    twist,
    validate,
)

from conftest import admissible, chi_of_twist, delta_of, divisors, hrr_chi


def V(r, k, l, ch2):
    return ChernCharacter(r, DivisorClass(k, l), Fraction(ch2))


def test_validate_examples():
    assert validate(Surface(1), V(2, 2, 2, -2)) == V(2, 2, 2, -2)
    with pytest.raises(NonIntegralChi):
        validate(Surface(0), V(6, 3, 3, Fraction(1, 2)))
    with pytest.raises(NonPositiveRank):
        validate(Surface(3), V(0, 0, 0, 0))


def test_validate_parity_rule():
    # ch2 must lie in k e / 2 + Z
    validate(Surface(1), V(2, 1, 0, Fraction(1, 2)))
    with pytest.raises(NonIntegralChi):
        validate(Surface(1), V(2, 1, 0, 0))
    validate(Surface(2), V(2, 1, 0, 0))


def test_invariants_examples():
    for e in range(4):
        inv = invariants(Surface(e), V(3, 0, 0, 0))
        assert inv.nu == DivisorClass(0, 0) and inv.delta == 0 and inv.chi == 3
    inv = invariants(Surface(1), V(2, 2, 2, -2))
    assert inv.nu == DivisorClass(1, 1)
    assert Surface(1).square(inv.nu) == 1
    assert (inv.delta, inv.chi) == (Fraction(3, 2), 3)
    assert discriminant(Surface(0), V(6, 3, 3, 1)) == Fraction(1, 12)


def test_invariants_polarization():
    X = Surface(2)
    inv = invariants(X, V(2, 2, 6, 0), H=DivisorClass(1, 3))
    # c1.H / (r H^2) = (-4 + 6 + 6) / (2 * 4)
    assert inv.mu_H == 1
    with pytest.raises(NonAmplePolarization):
        invariants(X, V(2, 2, 6, 0), H=DivisorClass(1, 2))


def test_twist_examples():
    X = Surface(2)
    v = V(2, 1, -1, -2)
    assert twist(X, v, DivisorClass(0, 0)) == v
    assert twist(X, v, DivisorClass(-1, 0)) == V(2, -1, -1, -1)


def test_serre_dual_examples():
    X = Surface(1)
    assert serre_dual(X, ch_line(X, (0, 0))) == V(1, -2, -3, 4)
    v = V(2, 1, -1, -2)
    assert serre_dual(Surface(2), serre_dual(Surface(2), v)) == v


def test_point_modification_examples():
    X = Surface(0)
    v = V(2, 0, 0, 0)
    w = point_modification(v)
    assert w == V(2, 0, 0, -1)
    assert discriminant(X, w) == Fraction(1, 2)
    assert point_modification(v, 3) == V(2, 0, 0, -3)


@given(admissible())
def test_chi_matches_hirzebruch_riemann_roch(case):
    X, v = case
    assert chi(X, v) == hrr_chi(X.e, v.rank, v.k, v.l, v.ch2)
    assert invariants(X, v).chi == chi(X, v)
    assert discriminant(X, v) == delta_of(X.e, v.rank, v.k, v.l, v.ch2)


def test_riemann_roch_grid():
    # r <= 4, |k|, |l| <= 6, ch2 in half-integers of [-8, 8], e <= 3
    for e in range(4):
        X = Surface(e)
        for r in range(1, 5):
            for k in range(-6, 7):
                for l in range(-6, 7):
                    for twice in range(-16, 17):
                        ch2 = Fraction(twice, 2)
                        expected = hrr_chi(e, r, k, l, ch2)
                        if expected.denominator != 1:
                            continue
                        v = V(r, k, l, ch2)
                        inv = invariants(X, v)
                        assert inv.chi == expected
                        assert inv.chi == r * (1 + Fraction(X.intersect(inv.nu, inv.nu - X.K), 2) - inv.delta)


@given(admissible(), divisors, divisors)
def test_twist_is_group_action(case, D1, D2):
    X, v = case
    assert twist(X, twist(X, v, D1), D2) == twist(X, v, D1 + D2)


@given(admissible(), divisors)
def test_twist_preserves_discriminant_and_chi_formula(case, D):
    X, v = case
    w = twist(X, v, D)
    assert w.rank == v.rank
    assert discriminant(X, w) == discriminant(X, v)
    expected = chi(X, v) + X.intersect(D, v.c1) + v.rank * (X.chi_line(D) - 1)
    assert chi(X, w) == expected
    assert chi_twist(X, v, D) == chi(X, w)
    assert chi(X, w) == chi_of_twist(X.e, v.rank, v.k, v.l, v.ch2, tuple(D))


@given(admissible())
def test_serre_dual_involution(case):
    X, v = case
    w = serre_dual(X, v)
    assert serre_dual(X, w) == v
    assert w.rank == v.rank
    assert discriminant(X, w) == discriminant(X, v)
    assert chi(X, w) == chi(X, v)
    validate(X, w)


@given(admissible())
def test_point_modification_shifts(case):
    X, v = case
    w = point_modification(v)
    assert chi(X, w) == chi(X, v) - 1
    assert discriminant(X, w) == discriminant(X, v) + Fraction(1, v.rank)
    assert discriminant(X, point_modification(v, 4)) == discriminant(X, v) + Fraction(4, v.rank)


def test_character_arithmetic():
    X = Surface(1)
    v = 3 * ch_line(X, (0, 0)) - ch_line(X, (-2, -2))
    assert v == V(2, 2, 2, -2)
    assert -(-v) == v
    assert v.as_tuple() == (2, 2, 2, -2)
