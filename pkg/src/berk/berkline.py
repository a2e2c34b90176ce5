"""Points, discs, branches and paths of the Berkovich projective line.

A finite point is stored as a center and a log-radius ``e`` (radius p**-e);
``e = +inf`` is the classical point at the center.  Generalized discs carry an
``outer`` flag: an outer disc is the complement in P^1 of an ordinary disc and
so contains infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import _fp
from .errors import NotNested, PrecisionExhausted, TargetAtBasepoint
from .field import FieldElement, FieldSpec, QElement, RatFuncElement
from .logvalue import INF, NEG_INF, LogValue, ZERO
from .poly import Poly


# -- decisions on valuations, precision aware ---------------------------------

def val_ge(x: FieldElement, e) -> bool:
    """val(x) >= e, raising only if the tracked precision cannot decide it."""
    e = LogValue.coerce(e)
    lb, exact = x.val_bound()
    if lb >= e:
        return True
    if exact:
        return False
    raise PrecisionExhausted(f"cannot decide val({x}) >= {e}")


def val_gt(x: FieldElement, e) -> bool:
    e = LogValue.coerce(e)
    lb, exact = x.val_bound()
    if lb > e:
        return True
    if exact:
        return False
    raise PrecisionExhausted(f"cannot decide val({x}) > {e}")


def capped_val(x: FieldElement, cap: LogValue) -> LogValue:
    """min(val(x), cap), which stays decidable when x is small but inexact."""
    if val_ge(x, cap):
        return cap
    return x.val()


# -- points -------------------------------------------------------------------

class BPoint:
    __slots__ = ("center", "e")

    def __init__(self, center: Optional[FieldElement], e=INF):
        self.center = center
        self.e = LogValue.coerce(e) if center is not None else INF

    @classmethod
    def infinity(cls) -> "BPoint":
        return cls(None)

    @classmethod
    def classical(cls, alpha: FieldElement) -> "BPoint":
        return cls(alpha, INF)

    @classmethod
    def eta(cls, alpha: FieldElement, e) -> "BPoint":
        return cls(alpha, LogValue.coerce(e))

    @property
    def is_infinity(self) -> bool:
        return self.center is None

    @property
    def spec(self) -> Optional[FieldSpec]:
        return None if self.center is None else self.center.spec

    def classify(self) -> int:
        return classify(self)

    def __repr__(self):
        if self.center is None:
            return "BPoint(infinity)"
        if not self.e.is_finite:
            return f"BPoint({self.center})"
        return f"BPoint(eta[{self.center}, e={self.e}])"


def classify(x: BPoint) -> int:
    if x.center is None or not x.e.is_finite:
        return 1
    return 2 if x.e.is_rational else 3


def point_eq(x: BPoint, y: BPoint) -> bool:
    if x.center is None or y.center is None:
        return x.center is None and y.center is None
    if x.e != y.e:
        return False
    return val_ge(x.center - y.center, x.e)


def leq(x: BPoint, y: BPoint) -> bool:
    """x <= y, i.e. x lies in the closed disc bounded by y."""
    if x.center is None or y.center is None:
        raise ValueError("leq is defined on the affine line only")
    if x.e < y.e:
        return False
    return val_ge(x.center - y.center, y.e)


def join(x: BPoint, y: BPoint) -> BPoint:
    if x.center is None or y.center is None:
        raise ValueError("join is defined on the affine line only")
    m = min(x.e, y.e)
    if m == INF:
        d = x.center - y.center
        return BPoint(x.center, d.val())
    return BPoint(x.center, capped_val(x.center - y.center, m))


def seminorm(P: Poly, x: BPoint) -> LogValue:
    """Additive form of |P|_x: the v with |P|_x = p**-v."""
    if x.center is None:
        raise ValueError("seminorm needs a finite point")
    if P.is_zero():
        return INF
    Q = P.taylor_shift(x.center)
    best = None
    pending = []
    for i, c in enumerate(Q.coeffs):
        lb, exact = c.val_bound()
        if i and not x.e.is_finite:
            break
        term = lb if i == 0 else lb + x.e * i
        if exact:
            if best is None or term < best:
                best = term
        else:
            pending.append(term)
    if best is None:
        raise PrecisionExhausted("every coefficient is zero at the tracked precision")
    for t in pending:
        if t < best:
            raise PrecisionExhausted("an inexact coefficient could decide the seminorm")
    return best


# -- discs --------------------------------------------------------------------

class GDisc:
    """Generalized disc anchored at ``center`` with log-radius ``e``.

    inner closed: {w >= e}     inner open: {w > e}
    outer closed: {w <= e} + inf   outer open: {w < e} + inf
    where w(x) = min(val(center(x) - center), e(x)).
    """

    __slots__ = ("center", "e", "closed", "outer")

    def __init__(self, center: FieldElement, e, closed: bool = True, outer: bool = False):
        e = LogValue.coerce(e)
        if not e.is_finite:
            raise ValueError("a disc needs a finite log-radius")
        self.center = center
        self.e = e
        self.closed = bool(closed)
        self.outer = bool(outer)

    @property
    def spec(self):
        return self.center.spec

    @property
    def contains_infinity(self) -> bool:
        return self.outer

    def boundary(self) -> BPoint:
        return BPoint(self.center, self.e)

    def complement(self) -> "GDisc":
        return GDisc(self.center, self.e, not self.closed, not self.outer)

    def closure(self) -> "GDisc":
        return GDisc(self.center, self.e, True, self.outer)

    def interior(self) -> "GDisc":
        return GDisc(self.center, self.e, False, self.outer)

    def __repr__(self):
        kind = ("D+" if self.closed else "D-") + ("_inf" if self.outer else "")
        return f"{kind}({self.center}, e={self.e})"


def _w_ge(x: BPoint, D: GDisc) -> bool:
    return x.e >= D.e and val_ge(x.center - D.center, D.e)


def _w_gt(x: BPoint, D: GDisc) -> bool:
    return x.e > D.e and val_gt(x.center - D.center, D.e)


def in_disc(x: BPoint, D: GDisc) -> bool:
    if x.center is None:
        return D.outer
    if D.outer:
        return not (_w_gt(x, D) if D.closed else _w_ge(x, D))
    return _w_ge(x, D) if D.closed else _w_gt(x, D)


def _inner_subset(A: GDisc, C: GDisc) -> bool:
    d = A.center - C.center
    if C.closed:
        return A.e >= C.e and val_ge(d, C.e)
    if A.closed:
        return A.e > C.e and val_gt(d, C.e)
    return A.e >= C.e and val_gt(d, C.e)


def discs_disjoint(A: GDisc, B: GDisc) -> bool:
    if A.outer and B.outer:
        return False
    if A.outer:
        A, B = B, A
    if B.outer:
        return _inner_subset(A, B.complement())
    return not (in_disc(BPoint(A.center), B) or in_disc(BPoint(B.center), A))


def disc_subset(A: GDisc, B: GDisc) -> bool:
    return discs_disjoint(A, B.complement())


def disc_eq(A: GDisc, B: GDisc) -> bool:
    if A.closed != B.closed or A.outer != B.outer or A.e != B.e:
        return False
    d = A.center - B.center
    return val_ge(d, A.e) if A.closed != A.outer else val_gt(d, A.e)


def closed_disc(alpha, e) -> GDisc:
    return GDisc(alpha, e, True, False)


def open_disc(alpha, e) -> GDisc:
    return GDisc(alpha, e, False, False)


# -- branches -----------------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    """A direction at a type 2/3 point.  ``rep`` is None for the outward branch,
    else a canonical type-1 point of the residue class, ``center + digit*pi^e``."""

    at: BPoint
    rep: Optional[FieldElement]
    digit: Optional[int] = None

    @property
    def outward(self) -> bool:
        return self.rep is None

    def __repr__(self):
        if self.rep is None:
            return f"Branch({self.at!r} -> inf)"
        return f"Branch({self.at!r} -> class {self.digit})"

    def label(self) -> str:
        return "out" if self.rep is None else f"d{self.digit}"


def branch_from_digit(x: BPoint, digit: Optional[int]) -> Branch:
    if digit is None:
        return Branch(x, None, None)
    if digit == 0:
        return Branch(x, x.center, 0)
    if not x.e.is_rational or x.e.a.denominator != 1:
        raise ValueError(f"no k-rational residue class {digit} at {x!r}")
    return Branch(x, x.center + x.spec.one().shift(int(x.e.a)) * digit, digit)


def branch_of(x: BPoint, target) -> Branch:
    if x.center is None or not x.e.is_finite:
        raise ValueError("branches are taken at type 2 or 3 points")
    if isinstance(target, BPoint):
        if point_eq(target, x):
            raise TargetAtBasepoint(f"{target!r} is the base point")
        if target.center is None or not leq(target, x):
            return Branch(x, None, None)
        target = target.center
    elif target is None:
        return Branch(x, None, None)
    target = x.spec.element(target)
    d = target - x.center
    if not val_ge(d, x.e):
        return Branch(x, None, None)
    if val_gt(d, x.e):
        return Branch(x, x.center, 0)
    # val(d) == e, so e is an integer here
    k = int(x.e.a)
    digit = d.shift(-k).residue()
    return branch_from_digit(x, digit)


def branch_eq(b1: Branch, b2: Branch) -> bool:
    if not point_eq(b1.at, b2.at):
        return False
    if b1.outward or b2.outward:
        return b1.outward and b2.outward
    return val_gt(b1.rep - b2.rep, b1.at.e)


def branch_disc(b: Branch) -> GDisc:
    """The component of P^1 minus the base point that the branch points into."""
    if b.outward:
        return GDisc(b.at.center, b.at.e, False, True)
    return open_disc(b.rep, b.at.e)


# -- paths --------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    center: FieldElement
    e_from: LogValue
    e_to: LogValue

    def loglength(self) -> LogValue:
        if not (self.e_from.is_finite and self.e_to.is_finite):
            return INF
        return abs(self.e_from - self.e_to)

    def start(self) -> BPoint:
        return BPoint(None) if self.e_from == NEG_INF else BPoint(self.center, self.e_from)

    def end(self) -> BPoint:
        return BPoint(None) if self.e_to == NEG_INF else BPoint(self.center, self.e_to)


@dataclass(frozen=True)
class Path:
    segments: tuple

    def start(self) -> BPoint:
        return self.segments[0].start()

    def end(self) -> BPoint:
        return self.segments[-1].end()


def path(x: BPoint, y: BPoint) -> Path:
    if x.center is None and y.center is None:
        raise ValueError("path from infinity to itself is not supported")
    if x.center is None:
        return Path((Segment(y.center, NEG_INF, y.e),))
    if y.center is None:
        return Path((Segment(x.center, x.e, NEG_INF),))
    j = join(x, y)
    segs = [s for s in (Segment(x.center, x.e, j.e), Segment(y.center, j.e, y.e))
            if s.e_from != s.e_to]
    if not segs:
        segs = [Segment(x.center, x.e, x.e)]
    return Path(tuple(segs))


def length(pth: Path) -> LogValue:
    total = ZERO
    for s in pth.segments:
        total = total + s.loglength()
    return total


def modulus(inner: BPoint, outer: BPoint) -> LogValue:
    for x in (inner, outer):
        if classify(x) == 1:
            raise NotNested("modulus needs type 2 or 3 endpoints")
    if not leq(inner, outer):
        raise NotNested(f"{inner!r} is not below {outer!r}")
    return inner.e - outer.e


def _series_inverse(a, n: int, p: int):
    # a(0) != 0; inverse of a modulo t^n by Newton iteration
    inv = [pow(a[0], -1, p)]
    k = 1
    while k < n:
        k = min(2 * k, n)
        e = _fp.mul(_fp.trim(a[:k], p), tuple(inv), p)[:k]
        two_minus = _fp.trim([(-x) % p for x in e] + [0] * (k - len(e)), p)
        two_minus = _fp.add(two_minus, (2,), p)
        inv = list(_fp.mul(tuple(inv), two_minus, p)[:k])
    return tuple(inv)


def tidy_disc(D: GDisc) -> GDisc:
    """Same disc, with its centre replaced by a short representative.

    Any point within distance < r of the centre names the same disc, so the
    centre is cut to its expansion modulo p^N (or t^N) with N = floor(e) + 1."""
    if not D.e.is_finite or not D.e.is_rational or D.center.is_exact_zero():
        return D
    c = D.center
    N = math.floor(D.e.a) + 1
    if isinstance(c, QElement):
        p = c.spec.p
        v = int(c.val().a)
        if v >= N:
            return GDisc(c.spec.zero(), D.e, D.closed, D.outer)
        q = c.value / Fraction(p) ** v
        mod = p ** (N - v)
        r = q.numerator * pow(q.denominator, -1, mod) % mod
        new = Fraction(r) * Fraction(p) ** v
        if new == c.value:
            return D
        return GDisc(QElement(c.spec, new), D.e, D.closed, D.outer)
    if isinstance(c, RatFuncElement):
        p = c.spec.p
        on, od = _fp.ord_t(c.num), _fp.ord_t(c.den)
        v = on - od
        if v >= N:
            return GDisc(c.spec.zero(), D.e, D.closed, D.outer)
        if len(c.den) == 1 and len(c.num) <= N:
            return D
        n = N - v
        num, den = c.num[on:], c.den[od:]
        series = _fp.trim(_fp.mul(num, _series_inverse(den, n, p), p)[:n], p)
        if v >= 0:
            new = RatFuncElement(c.spec, (0,) * v + series, (1,))
        else:
            new = RatFuncElement(c.spec, series, (0,) * (-v) + (1,))
        return GDisc(new, D.e, D.closed, D.outer)
    return D
