from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from berk.berkline import BPoint, branch_from_digit, branch_of
from berk.logvalue import INF, LogValue
from berk.poly import Poly
from berk.potential import (
    RationalFn, count_roots, eval_abs, finite_difference_slope, harmonicity, newton_polygon,
    slope_along_branch,
)

from strategies import F3T, Q5, elements

P = 5
T = Poly.T(Q5)


def test_newton_polygon_examples():
    assert newton_polygon(T ** 2 - P).slopes == ((LogValue(Fraction(1, 2)), 2),)
    assert newton_polygon((T - 1) * (T - P)).slopes == ((LogValue(0), 1), (LogValue(1), 1))
    assert newton_polygon(T - Q5(50)).slopes == ((LogValue(2), 1),)
    assert newton_polygon(T ** 2 * (T - 1)).slopes == ((LogValue(0), 1), (INF, 2))


def test_count_roots_examples():
    f = T ** 2 - P
    assert count_roots(f, Q5(0), Fraction(1, 2)) == 2
    assert count_roots(f, Q5(0), 1) == 0
    g = (T - 1) * (T - P)
    assert count_roots(g, Q5(0), 0) == 2
    assert count_roots(g, Q5(0), 0, strict=True) == 1
    assert count_roots(T - 7, Q5(7), 9) == 1


def test_slopes_of_T():
    F = RationalFn(T)
    x = BPoint(Q5(0), 0)
    assert slope_along_branch(F, x, branch_of(x, Q5(0))) == -1
    assert slope_along_branch(F, x, branch_of(x, None)) == 1


def test_slopes_of_quotient():
    F = RationalFn(T - 1, T)
    x = BPoint(Q5(0), 0)
    assert slope_along_branch(F, x, branch_of(x, Q5(1))) == -1
    assert slope_along_branch(F, x, branch_of(x, Q5(0))) == 1
    assert slope_along_branch(F, x, branch_of(x, None)) == 0
    for target in (Q5(1), Q5(0), None, Q5(3)):
        b = branch_of(x, target)
        assert finite_difference_slope(F, x, b) == slope_along_branch(F, x, b)


def test_harmonicity_examples():
    x = BPoint(Q5(0), 0)
    h = harmonicity(RationalFn(T), x)
    assert sorted(mu for _, mu in h.support) == [-1, 1] and h.total == 0
    h = harmonicity(RationalFn(Poly(Q5, [3])), x)
    assert h.support == () and h.total == 0
    F = RationalFn((T - 1) * (T - P), T ** 2)
    h = harmonicity(F, x)
    assert h.total == 0
    mus = {("inf" if b.outward else b.rep.residue()): mu for b, mu in h.support}
    assert mus == {0: 1, 1: -1, "inf": 0}


def test_nonrational_roots_are_lumped():
    # T^2 - 2 has no root in Q_5 (2 is not a square mod 5)
    F = RationalFn(T ** 2 - 2)
    h = harmonicity(F, BPoint(Q5(0), 0))
    assert dict((b if b == "nonrational" else "inf", mu) for b, mu in h.support) == {"nonrational": -2, "inf": 2}
    assert h.total == 0


def test_eval_abs():
    x = BPoint(Q5(0), 3)
    assert eval_abs(RationalFn(Poly(Q5, [1]), T), x) == -3
    assert eval_abs(RationalFn(T, T), x) == 0
    assert eval_abs(RationalFn(T - 1, T), BPoint(Q5(0), 0)) == 0


# -- properties ---------------------------------------------------------------

@st.composite
def split_polys(draw, spec):
    roots = draw(st.lists(elements(spec), min_size=1, max_size=4))
    f = Poly(spec, [1])
    for r in roots:
        f = f * Poly.linear(spec, r)
    return f, roots


@pytest.mark.parametrize("spec", [Q5, F3T], ids=["exact_q", "ratfunc_fp"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_count_roots_brute_force(spec, data):
    f, roots = data.draw(split_polys(spec))
    a = data.draw(elements(spec))
    e = LogValue(Fraction(data.draw(st.integers(-6, 8)), 2))
    for strict in (False, True):
        brute = sum(1 for r in roots if ((r - a).val() > e if strict else (r - a).val() >= e))
        assert count_roots(f, a, e, strict) == brute


@pytest.mark.parametrize("spec", [Q5, F3T], ids=["exact_q", "ratfunc_fp"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_harmonic_and_slopes_agree_with_finite_differences(spec, data):
    num, _ = data.draw(split_polys(spec))
    den, _ = data.draw(split_polys(spec))
    F = RationalFn(num, den)
    x = BPoint(data.draw(elements(spec)), LogValue(data.draw(st.integers(-3, 4))))
    h = harmonicity(F, x)
    assert h.total == 0
    for b, mu in h.support:
        if b != "nonrational":
            assert finite_difference_slope(F, x, b) == mu
    d = data.draw(st.integers(0, spec.p - 1))
    b = branch_from_digit(x, d)
    assert finite_difference_slope(F, x, b) == slope_along_branch(F, x, b)
