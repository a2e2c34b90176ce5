"""Newton polygons and the variation of |F| for rational functions F.

Slopes are reported as root valuations: a NewtonPolygon entry (s, m) says that
exactly m roots (in an algebraic closure, with multiplicity) have valuation s.
The sign convention for branch exponents: mu > 0 means |F| grows when moving
away from the base point along the branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .berkline import BPoint, Branch, branch_from_digit, seminorm
from .errors import PrecisionExhausted
from .logvalue import INF, LogValue
from .poly import Poly, poly_divmod, poly_gcd


@dataclass(frozen=True)
class NewtonPolygon:
    slopes: Tuple[Tuple[LogValue, int], ...]   # (root valuation, multiplicity), increasing

    def count(self, e: LogValue, strict: bool = False) -> int:
        return sum(m for s, m in self.slopes if (s > e if strict else s >= e))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.slopes)


def _cross(o, a, b) -> LogValue:
    return (b[1] - o[1]) * (a[0] - o[0]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(P: Poly) -> NewtonPolygon:
    if P.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    exact, loose = [], []
    for i, c in enumerate(P.coeffs):
        if c.is_exact_zero():
            continue
        lb, ok = c.val_bound()
        (exact if ok else loose).append((i, lb))
    if not exact:
        raise PrecisionExhausted("no coefficient is known to be nonzero")
    lo, hi = exact[0][0], exact[-1][0]
    hull: List[Tuple[int, LogValue]] = []
    for pt in exact:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt).sign() <= 0:
            hull.pop()
        hull.append(pt)
    for i, lb in loose:
        if i < lo or i > hi:
            raise PrecisionExhausted("an end coefficient is zero only up to precision")
        for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
            if x0 <= i <= x1:
                line = y0 + (y1 - y0) * Fraction(i - x0, x1 - x0)
                if lb < line:
                    raise PrecisionExhausted("an inexact coefficient could lower the Newton polygon")
                break
    slopes = []
    if lo:
        slopes.append((INF, lo))
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slopes.append((-((y1 - y0) * Fraction(1, x1 - x0)), x1 - x0))
    slopes.sort(key=lambda t: t[0])
    return NewtonPolygon(tuple(slopes))


def count_roots(P: Poly, alpha, e, strict: bool = False) -> int:
    """Roots z of P with val(z - alpha) >= e (or > e when strict)."""
    e = LogValue.coerce(e)
    return newton_polygon(P.taylor_shift(alpha)).count(e, strict)


class RationalFn:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None):
        spec = num.spec
        if den is None:
            den = Poly(spec, [1])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if spec.backend != "capped_padic" and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
        self.num, self.den = num, den

    @property
    def spec(self):
        return self.num.spec

    def __repr__(self):
        return f"RationalFn({self.num!r} / {self.den!r})"


def eval_abs(F: RationalFn, x: BPoint) -> LogValue:
    """Additive |F|_x: seminorm(num) - seminorm(den); +inf at zeros, -inf at poles."""
    return seminorm(F.num, x) - seminorm(F.den, x)


def _bounded_count(P: Poly, b: Branch) -> int:
    return count_roots(P, b.rep, b.at.e, strict=True) if not P.is_zero() else 0


def slope_along_branch(F: RationalFn, x: BPoint, b: Branch) -> int:
    if x.center is None or not x.e.is_finite:
        raise ValueError("slopes are taken at type 2 or 3 points")
    if b.outward:
        return count_roots(F.num, x.center, x.e) - count_roots(F.den, x.center, x.e)
    return -(_bounded_count(F.num, b) - _bounded_count(F.den, b))


@dataclass(frozen=True)
class Harmonicity:
    support: Tuple[Tuple[object, int], ...]   # (Branch or "nonrational", mu)
    total: int


def _digits(x: BPoint):
    if x.e.is_rational and x.e.a.denominator == 1:
        return range(x.spec.p)
    return range(1)


def harmonicity(F: RationalFn, x: BPoint) -> Harmonicity:
    """Branch exponents at x.  Roots lying in residue classes with no point of
    the base field are lumped into one "nonrational" entry."""
    support = []
    inside = []
    for P in (F.num, F.den):
        inside.append(count_roots(P, x.center, x.e))
    accounted = [0, 0]
    for d in _digits(x):
        b = branch_from_digit(x, d)
        cn, cd = _bounded_count(F.num, b), _bounded_count(F.den, b)
        accounted[0] += cn
        accounted[1] += cd
        if cn or cd:
            support.append((b, -(cn - cd)))
    rest = (inside[0] - accounted[0], inside[1] - accounted[1])
    if rest[0] or rest[1]:
        support.append(("nonrational", -(rest[0] - rest[1])))
    out = Branch(x, None, None)
    if F.num.degree > 0 or F.den.degree > 0:
        support.append((out, inside[0] - inside[1]))
    return Harmonicity(tuple(support), sum(mu for _, mu in support))


def finite_difference_slope(F: RationalFn, x: BPoint, b: Branch, delta=Fraction(1, 10 ** 4)) -> Fraction:
    """Slope of log|F| along b, measured between x and a nearby point of b."""
    delta = Fraction(delta)
    if b.outward:
        y = BPoint(x.center, x.e - delta)
    else:
        y = BPoint(b.rep, x.e + delta)
    change = eval_abs(F, x) - eval_abs(F, y)   # log_p|F|(y) - log_p|F|(x)
    q = change * (1 / delta)
    if not q.is_rational:
        raise ValueError("finite difference left the rational value group")
    return q.a
