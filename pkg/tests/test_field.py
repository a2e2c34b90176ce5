from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from berk.errors import BackendMismatch, DivisionByZero, NotSimpleRoot, PrecisionExhausted
from berk.field import FieldSpec
from berk.logvalue import INF, LogValue
from berk.poly import Poly, field_sqrt, hensel_root

from strategies import F3T, Q5, SPECS, elements, same

Q7 = FieldSpec("exact_q", 7)


def test_valuations():
    assert Q5(50).val() == 2
    t = F3T.uniformizer()
    assert (t * t / (t + 1)).val() == 2
    assert Q5(0).val() == INF
    assert Q5("3/125").val() == -3


def test_rational_arithmetic():
    assert Q5("1/2") + Q5("1/3") == Q5("5/6")
    x, y = Q5(5), Q5(125)
    assert (x + y).val() == 1


def test_padic_precision_of_products():
    K = FieldSpec("capped_padic", 7, 20)
    u = K(3) * K(Fraction(1, 2))
    assert u.val() == 0 and u.prec == 20


def test_padic_zero_up_to_precision_is_not_zero():
    K = FieldSpec("capped_padic", 7, 10)
    z = K(7 ** 12)
    assert not z.is_exact_zero()
    with pytest.raises(PrecisionExhausted):
        z.val()
    assert z.val_bound() == (LogValue(10), False)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q5(0).inverse()
    with pytest.raises(DivisionByZero):
        F3T(0).inverse()


def test_backend_mismatch():
    with pytest.raises(BackendMismatch):
        Q5(1) + Q7(1)


def test_shorthand():
    assert FieldSpec.from_shorthand("q7") == Q7
    assert FieldSpec.from_shorthand("qp7@40").precision == 40
    assert FieldSpec.from_shorthand("fp3t").backend == "ratfunc_fp"


def test_hensel_cube_root_of_unity():
    K = FieldSpec("capped_padic", 7, 40)
    assert (2 ** 2 + 2 + 1) % 7 == 0
    rho = hensel_root(Poly(K, [1, 1, 1]), K(2))
    assert rho.residue() == 2
    lb, _ = (rho * rho + rho + 1).val_bound()
    assert lb >= 40


def test_hensel_sqrt2():
    K = FieldSpec("capped_padic", 7, 30)
    r = hensel_root(Poly(K, [-2, 0, 1]), K(3))
    assert r.residue() == 3
    assert (r * r - 2).val_bound()[0] >= 30


def test_hensel_not_simple():
    K = FieldSpec("capped_padic", 7, 30)
    with pytest.raises(NotSimpleRoot):
        hensel_root(Poly(K, [-7, 0, 1]), K(0))


def test_sqrt_exact_backends():
    assert field_sqrt(Q5("49/4")) ** 2 == Q5("49/4")
    t = F3T.uniformizer()
    x = (1 + t) ** 2 / t ** 4
    assert field_sqrt(x) ** 2 == x


def test_logvalue_order_and_halving():
    assert LogValue(1) < LogValue(0, 1)
    assert LogValue(3, 1).halve() == LogValue(Fraction(3, 2), Fraction(1, 2))
    assert LogValue(Fraction(7, 5)) < LogValue(0, 1)
    assert LogValue(Fraction(3, 2)) > LogValue(0, 1)


@given(st.fractions(), st.fractions())
def test_logvalue_parse_roundtrip(a, b):
    v = LogValue(a, b)
    assert LogValue.parse(str(v)) == v
    assert LogValue.from_json(v.to_json()) == v


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50),
       st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_logvalue_order_matches_floats(a, b, c, d):
    u, v = LogValue(a, b), LogValue(c, d)
    fu, fv = float(a) + float(b) * 2 ** 0.5, float(c) + float(d) * 2 ** 0.5
    if abs(fu - fv) > 1e-9:
        assert (u < v) == (fu < fv)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.backend)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_laws(spec, data):
    x = data.draw(elements(spec))
    y = data.draw(elements(spec))
    z = data.draw(elements(spec, nonzero=True))
    assert same((x + y) - y, x)
    assert same((x * y) * z, x * (y * z))
    assert same(x * (y + z), x * y + x * z)
    assert same((x / z) * z, x)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.backend)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_valuation_laws(spec, data):
    x = data.draw(elements(spec, nonzero=True))
    y = data.draw(elements(spec, nonzero=True))
    assert (x * y).val() == x.val() + y.val()
    s = x + y
    if not s.is_exact_zero():
        lb, exact = s.val_bound()
        assert lb >= min(x.val(), y.val())
        if x.val() != y.val():
            assert exact and lb == min(x.val(), y.val())


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.backend)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_element_text_roundtrip(spec, data):
    x = data.draw(elements(spec))
    assert same(spec.parse(str(x)), x)
