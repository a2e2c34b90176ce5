"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from berk.berkline import BPoint
from berk.field import FieldSpec
from berk.logvalue import LogValue

Q5 = FieldSpec("exact_q", 5)
QP7 = FieldSpec("capped_padic", 7, 30)
F3T = FieldSpec("ratfunc_fp", 3)
SPECS = (Q5, QP7, F3T)


def _poly_t(spec, coeffs):
    t = spec.uniformizer()
    out = spec.zero()
    for i, c in enumerate(coeffs):
        out = out + spec.element(c) * t ** i
    return out


@st.composite
def elements(draw, spec, nonzero=False):
    if spec.backend == "ratfunc_fp":
        num = draw(st.lists(st.integers(0, 2), min_size=1, max_size=4))
        den = draw(st.lists(st.integers(0, 2), min_size=1, max_size=3))
        shift = draw(st.integers(-2, 2))
        d = _poly_t(spec, den)
        if d.is_exact_zero():
            d = spec.one()
        x = _poly_t(spec, num) / d
        if not x.is_exact_zero():
            x = x * spec.uniformizer() ** shift
    else:
        n = draw(st.integers(-10 ** 4, 10 ** 4))
        d = draw(st.integers(1, 10 ** 3))
        x = spec.element(Fraction(n, d))
    if nonzero and x.is_exact_zero():
        x = spec.one()
    return x


logradii = st.builds(lambda k: LogValue(Fraction(k, 2)), st.integers(-8, 12))


@st.composite
def points(draw, spec):
    return BPoint(draw(elements(spec)), draw(logradii))


def same(x, y) -> bool:
    """Equality, read up to the working precision for capped p-adics."""
    if x.spec.backend != "capped_padic":
        return x == y
    d = x - y
    return d.is_exact_zero() or not d.val_bound()[1]
