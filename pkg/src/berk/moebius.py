"""PGL_2(k) acting on the Berkovich projective line.

Points of P^1(k) are field elements, with ``None`` standing for infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

from . import _fp
from .berkline import BPoint, GDisc, in_disc
from .errors import FixesInfinity, NotLoxodromic, PrecisionExhausted
from .field import FieldElement, FieldSpec, PadicElement, QElement, RatFuncElement
from .logvalue import LogValue
from .poly import field_sqrt


def is_zero(x: FieldElement) -> bool:
    """Exact zero test; an element that is only zero up to precision is undecidable."""
    if x.is_exact_zero():
        return True
    lb, exact = x.val_bound()
    if not exact:
        raise PrecisionExhausted(f"cannot decide whether {x} is zero")
    return False


class Moebius:
    __slots__ = ("a", "b", "c", "d", "_det")

    def __init__(self, a, b, c, d, spec: Optional[FieldSpec] = None):
        if spec is None:
            spec = next(x.spec for x in (a, b, c, d) if isinstance(x, FieldElement))
        self.a, self.b, self.c, self.d = (spec.element(x) for x in (a, b, c, d))
        self._det = self.a * self.d - self.b * self.c
        if is_zero(self._det):
            raise ValueError("singular matrix: ad - bc = 0")

    @classmethod
    def identity(cls, spec):
        return cls(1, 0, 0, 1, spec)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self) -> FieldElement:
        return self._det

    def trace(self) -> FieldElement:
        return self.a + self.d

    def __matmul__(self, other: "Moebius") -> "Moebius":
        return compose(self, other)

    def inverse(self) -> "Moebius":
        return inverse(self)

    def __call__(self, z):
        return apply_element(self, z)

    def normalized(self) -> "Moebius":
        return normalize(self)

    def __repr__(self):
        return f"Moebius([{self.a}, {self.b}; {self.c}, {self.d}])"


def compose(m1: Moebius, m2: Moebius) -> Moebius:
    a = m1.a * m2.a + m1.b * m2.c
    b = m1.a * m2.b + m1.b * m2.d
    c = m1.c * m2.a + m1.d * m2.c
    d = m1.c * m2.b + m1.d * m2.d
    return normalize(Moebius(a, b, c, d))


def inverse(m: Moebius) -> Moebius:
    return Moebius(m.d, -m.b, -m.c, m.a)


def normalize(m: Moebius) -> Moebius:
    """Canonical representative of the projective class.

    p-adic: shift so the smallest valuation is 0 (lossless).  Q: primitive
    integer matrix with positive first nonzero entry.  F_p(t): primitive
    polynomial matrix with monic first nonzero entry.
    """
    spec = m.spec
    es = m.entries()
    if spec.backend == "capped_padic":
        k = min(x.val_bound()[0] for x in es)
        if not k.is_finite:
            return m
        return _raw(spec, [x.shift(-int(k.a)) for x in es])
    if spec.backend == "exact_q":
        vals = [x.value for x in es]
        den = 1
        for q in vals:
            den = den * q.denominator // gcd(den, q.denominator)
        ints = [int(q * den) for q in vals]
        g = 0
        for n in ints:
            g = gcd(g, n)
        first = next(n for n in ints if n)
        if first < 0:
            g = -g
        return _raw(spec, [QElement(spec, n // g) for n in ints])
    p = spec.p
    den = (1,)
    for x in es:
        den = _fp.divmod_(_fp.mul(den, x.den, p), _fp.gcd(den, x.den, p), p)[0]
    polys = [_fp.divmod_(_fp.mul(x.num, den, p), x.den, p)[0] for x in es]
    g = ()
    for f in polys:
        g = _fp.gcd(g, f, p) if g else _fp.monic(f, p)
    polys = [_fp.divmod_(f, g, p)[0] for f in polys]
    lead = next(f[-1] for f in polys if f)
    polys = [_fp.scale(f, pow(lead, -1, p), p) for f in polys]
    return _raw(spec, [RatFuncElement(spec, f, (1,)) for f in polys])


def _raw(spec, es) -> Moebius:
    m = Moebius.__new__(Moebius)
    m.a, m.b, m.c, m.d = es
    m._det = m.a * m.d - m.b * m.c
    return m


def proj_eq(m1: Moebius, m2: Moebius) -> bool:
    """All 2x2 minors of the stacked entry vectors vanish.

    p-adic minors that are zero up to precision count as vanishing: the two
    matrices agree on every tracked digit.
    """
    e1, e2 = m1.entries(), m2.entries()
    for i in range(4):
        for j in range(i + 1, 4):
            minor = e1[i] * e2[j] - e1[j] * e2[i]
            if minor.is_exact_zero():
                continue
            if isinstance(minor, PadicElement) and minor.is_zero_at_precision():
                continue
            return False
    return True


def matrix_power(m: Moebius, n: int) -> Moebius:
    if n < 0:
        return matrix_power(inverse(m), -n)
    out = Moebius.identity(m.spec)
    for _ in range(n):
        out = compose(out, m)
    return out


# -- action on P^1(k) and on the Berkovich line -------------------------------

def apply_element(m: Moebius, z: Optional[FieldElement]) -> Optional[FieldElement]:
    if z is None:
        return None if is_zero(m.c) else m.a / m.c
    z = m.spec.element(z)
    den = m.c * z + m.d
    if is_zero(den):
        return None
    return (m.a * z + m.b) / den


def _affine(D: GDisc, scale: FieldElement, shift: FieldElement) -> GDisc:
    # z -> scale*z + shift
    return GDisc(D.center * scale + shift, D.e + scale.val(), D.closed, D.outer)


def invert_disc(D: GDisc) -> GDisc:
    """Image under z -> 1/z."""
    if D.outer:
        return invert_disc(D.complement()).complement()
    spec = D.spec
    zero = spec.zero()
    if in_disc(BPoint(zero), D):
        return GDisc(zero, -D.e, D.closed, True)
    v = D.center.val()
    return GDisc(D.center.inverse(), D.e - v * 2, D.closed, False)


def apply_disc(m: Moebius, D: GDisc) -> GDisc:
    if D.outer:
        return apply_disc(m, D.complement()).complement()
    # pole -d/c outside the closed disc, i.e. |c*alpha + d| > r|c|: the image is
    # the disc about m(alpha) scaled by |det|/|c*alpha + d|^2.  This stays
    # decidable when c is only zero up to precision.
    w = m.c * D.center + m.d
    wv, exact = w.val_bound()
    if exact and not w.is_exact_zero() and wv < D.e + m.c.val_bound()[0]:
        center = (m.a * D.center + m.b) / w
        return GDisc(center, D.e + m.det().val() - wv * 2, D.closed, False)
    if is_zero(m.c):
        return _affine(D, m.a / m.d, m.b / m.d)
    shifted = GDisc(D.center + m.d / m.c, D.e, D.closed, D.outer)
    inv = invert_disc(shifted)
    return _affine(inv, -(m.det() / (m.c * m.c)), m.a / m.c)


def apply_point(m: Moebius, x: BPoint) -> BPoint:
    if x.center is None or not x.e.is_finite:
        w = apply_element(m, x.center)
        return BPoint(w) if w is not None else BPoint.infinity()
    return apply_disc(m, GDisc(x.center, x.e, True, False)).boundary()


# -- loxodromic elements and Koebe coordinates --------------------------------

def is_loxodromic(m: Moebius) -> bool:
    vdet = m.det().val()
    tr = m.trace()
    if tr.is_exact_zero():
        return False
    lb, exact = tr.val_bound()
    if exact:
        return vdet > lb * 2
    if lb * 2 >= vdet:
        return False
    raise PrecisionExhausted("trace too close to zero to decide loxodromy")


@dataclass(frozen=True)
class Koebe:
    alpha: Optional[FieldElement]        # attracting fixed point, None = infinity
    alpha_prime: Optional[FieldElement]  # repelling fixed point
    beta: FieldElement

    def __post_init__(self):
        if self.alpha is None and self.alpha_prime is None:
            raise ValueError("alpha and alpha' must differ")
        if self.alpha is not None and self.alpha_prime is not None and is_zero(self.alpha - self.alpha_prime):
            raise ValueError("alpha and alpha' must differ")
        if not (self.beta.val() > 0) or self.beta.is_exact_zero():
            raise ValueError("Koebe beta must satisfy 0 < |beta| < 1")


def _eigen(m: Moebius) -> Tuple[FieldElement, FieldElement]:
    if m.b.is_exact_zero() or m.c.is_exact_zero():
        return m.a, m.d
    tr = m.trace()
    disc = tr * tr - m.det() * 4
    s = field_sqrt(disc)
    half = m.spec.element(2).inverse()
    return (tr + s) * half, (tr - s) * half


def _fixed_point(m: Moebius, lam: FieldElement) -> Optional[FieldElement]:
    if not m.c.is_exact_zero():
        return (lam - m.d) / m.c
    # upper triangular: eigenvalue a belongs to infinity
    if is_zero(lam - m.a) and not is_zero(m.a - m.d):
        return None
    return m.b / (m.d - m.a)


def koebe(m: Moebius) -> Koebe:
    if not is_loxodromic(m):
        raise NotLoxodromic(f"{m!r} is not loxodromic")
    l1, l2 = _eigen(m)
    # attracting fixed point carries the eigenvalue of larger absolute value
    if l1.val() > l2.val():
        l1, l2 = l2, l1
    if m.c.is_exact_zero():
        if l1 is m.a or l1 == m.a:
            att, rep = None, m.b / (m.d - m.a)
        else:
            att, rep = m.b / (m.d - m.a), None
    else:
        att, rep = _fixed_point(m, l1), _fixed_point(m, l2)
    return Koebe(att, rep, l2 / l1)


def from_koebe(k: Koebe) -> Moebius:
    al, ap, be = k.alpha, k.alpha_prime, k.beta
    spec = be.spec
    if ap is None:
        return Moebius(be, (1 - be) * al, 0, 1, spec)
    if al is None:
        return Moebius(1, (be - 1) * ap, 0, be, spec)
    return Moebius(al - be * ap, (be - 1) * al * ap, 1 - be, be * al - ap, spec)


def attracting_point(m: Moebius) -> Optional[FieldElement]:
    return koebe(m).alpha


# -- twisted Ford discs -------------------------------------------------------

def ford_discs(m: Moebius, lam) -> Tuple[GDisc, GDisc]:
    """Closed and open twisted Ford discs of (m, lambda).

    ``lam`` is the log-value l with lambda = p**-l, so lam = 0 is lambda = 1
    and negating lam inverts lambda.
    """
    lam = LogValue.coerce(lam)
    if is_zero(m.c):
        raise FixesInfinity("c = 0: the map fixes infinity")
    if not is_loxodromic(m):
        raise NotLoxodromic(f"{m!r} is not loxodromic")
    center = -(m.d / m.c)
    e = (m.det().val() + lam).halve() - m.c.val()
    return GDisc(center, e, True, False), GDisc(center, e, False, False)
