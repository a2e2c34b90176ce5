from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from berk.berkline import (
    BPoint, GDisc, branch_eq, branch_of, classify, closed_disc, disc_eq, discs_disjoint,
    in_disc, join, leq, length, modulus, open_disc, path, point_eq, seminorm, tidy_disc,
)
from berk.logvalue import LogValue
from berk.poly import Poly

from strategies import F3T, Q5, SPECS, elements, logradii, points

P = 5


def eta(c, e):
    return BPoint(Q5(c), LogValue(Fraction(e)))


def test_seminorm_examples():
    T = Poly.T(Q5)
    assert seminorm(T - 3, eta(3, 2)) == 2
    assert seminorm(Poly(Q5, [1, 5, 1]), eta(0, 0)) == 0
    # |T - a| at eta(b, s) is max(|b - a|, s)
    assert seminorm(T - 1, eta(6, 3)) == 1
    assert seminorm(T - 1, eta(6, Fraction(1, 2))) == Fraction(1, 2)


def test_point_equality():
    assert point_eq(eta(0, 0), eta(P, 0))
    assert point_eq(eta(0, 0), eta(1, 0))
    assert not point_eq(eta(0, 0), eta(0, 1))


def test_order():
    assert leq(BPoint(Q5(0)), eta(0, 0))
    assert not leq(eta(0, 0), BPoint(Q5(0)))
    assert leq(eta(1, 1), eta(0, 0))


def test_join():
    assert point_eq(join(BPoint(Q5(0)), BPoint(Q5(1))), eta(0, 0))
    assert point_eq(join(eta(0, 1), eta(0, 0)), eta(0, 0))
    assert point_eq(join(BPoint(Q5(P)), BPoint(Q5(P * P))), eta(P, 1))


def test_classify():
    assert classify(eta(0, Fraction(1, 2))) == 2
    assert classify(BPoint(Q5(0), LogValue(0, 1))) == 3
    assert classify(BPoint(Q5(0))) == 1


def test_lengths():
    assert length(path(eta(0, 0), eta(P, 2))) == 2
    assert length(path(eta(0, 0), eta(0, 0))) == 0
    # |alpha| = p, r = 1/p: moduli p (out to eta_p) and p^2 (down to eta_{alpha, 1/p}) compose
    assert length(path(eta(0, 0), eta(Fraction(1, P), 1))) == 3


def test_modulus():
    assert modulus(eta(0, 1), eta(0, 0)) == 1
    assert modulus(eta(0, 3), eta(0, 1)) == 2
    assert modulus(eta(P, 2), eta(0, 0)) == 2


def test_discs():
    assert in_disc(eta(0, 1), closed_disc(Q5(0), 0))
    assert discs_disjoint(closed_disc(Q5(0), 1), closed_disc(Q5(1), 1))
    assert discs_disjoint(closed_disc(Q5(0), 1), GDisc(Q5(0), -1, True, True))
    assert not discs_disjoint(closed_disc(Q5(0), -1), GDisc(Q5(0), -1, True, True))
    assert in_disc(BPoint.infinity(), GDisc(Q5(0), -1, True, True))
    assert not in_disc(eta(0, 0), open_disc(Q5(0), 0))


def test_branches():
    x = eta(0, 0)
    assert branch_eq(branch_of(x, Q5(0)), branch_of(x, Q5(P)))
    assert not branch_eq(branch_of(x, Q5(0)), branch_of(x, Q5(1)))
    assert branch_eq(branch_of(x, None), branch_of(x, Q5(Fraction(1, P))))


# -- properties ---------------------------------------------------------------

SPEC_IDS = [s.backend for s in SPECS]


def _poly(draw, spec):
    cs = draw(st.lists(elements(spec), min_size=1, max_size=4))
    return Poly(spec, cs)


@pytest.mark.parametrize("spec", SPECS, ids=SPEC_IDS)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_seminorm_is_multiplicative_and_ultrametric(spec, data):
    x = data.draw(points(spec))
    A, B = _poly(data.draw, spec), _poly(data.draw, spec)
    if A.is_zero() or B.is_zero():
        return
    assert seminorm(A * B, x) == seminorm(A, x) + seminorm(B, x)
    if not (A + B).is_zero():
        assert seminorm(A + B, x) >= min(seminorm(A, x), seminorm(B, x))


@pytest.mark.parametrize("spec", SPECS, ids=SPEC_IDS)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_join_is_least_upper_bound(spec, data):
    x, y, z = (data.draw(points(spec)) for _ in range(3))
    j = join(x, y)
    assert leq(x, j) and leq(y, j)
    if leq(x, z) and leq(y, z):
        assert leq(j, z)


@pytest.mark.parametrize("spec", SPECS, ids=SPEC_IDS)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_length_is_additive_through_the_join(spec, data):
    x, y = data.draw(points(spec)), data.draw(points(spec))
    j = join(x, y)
    assert length(path(x, y)) == length(path(x, j)) + length(path(j, y))
    assert length(path(x, y)) == length(path(y, x))


@pytest.mark.parametrize("spec", SPECS, ids=SPEC_IDS)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_point_eq_is_a_congruence(spec, data):
    x = data.draw(points(spec))
    d = data.draw(elements(spec))
    if d.is_exact_zero() or not d.val_bound()[1] or d.val() < x.e:
        return
    y = BPoint(x.center + d, x.e)
    assert point_eq(x, y)
    P = _poly(data.draw, spec)
    if not P.is_zero():
        assert seminorm(P, x) == seminorm(P, y)


@pytest.mark.parametrize("spec", [Q5, F3T], ids=["exact_q", "ratfunc_fp"])
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_tidy_disc_keeps_the_disc(spec, data):
    c = data.draw(elements(spec))
    D = GDisc(c, data.draw(logradii), data.draw(st.booleans()), data.draw(st.booleans()))
    assert disc_eq(tidy_disc(D), D)
