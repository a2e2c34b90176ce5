"""Univariate polynomials over a FieldSpec, Hensel lifting and square roots."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, List

from . import _fp
from .errors import NotSimpleRoot, PrecisionExhausted, SquareRootFailure
from .field import FieldElement, FieldSpec, PadicElement, QElement, RatFuncElement


class Poly:
    """Coefficients in ascending degree.  Only exact zeros are trimmed."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable):
        self.spec = spec
        cs = [spec.element(c) for c in coeffs]
        while cs and cs[-1].is_exact_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def T(cls, spec):
        return cls(spec, [0, 1])

    @classmethod
    def linear(cls, spec, root):
        # T - root
        return cls(spec, [-spec.element(root), 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = _as_poly(self.spec, other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.spec.zero()
        return Poly(self.spec, [(self.coeffs[i] if i < len(self.coeffs) else z)
                                + (other.coeffs[i] if i < len(other.coeffs) else z) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.spec, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(self.spec, other))

    def __rsub__(self, other):
        return _as_poly(self.spec, other) - self

    def __mul__(self, other):
        other = _as_poly(self.spec, other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.spec, [])
        out = [self.spec.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly(self.spec, [1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x) -> FieldElement:
        x = self.spec.element(x)
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(self.spec, [c * i for i, c in enumerate(self.coeffs)][1:])

    def taylor_shift(self, alpha) -> "Poly":
        """Coefficients of P(T + alpha), i.e. P expanded in powers of (T - alpha)."""
        alpha = self.spec.element(alpha)
        cs = list(self.coeffs)
        n = len(cs)
        # repeated synthetic division
        for k in range(n - 1):
            for j in range(n - 2, k - 1, -1):
                cs[j] = cs[j] + alpha * cs[j + 1]
        return Poly(self.spec, cs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, spec, arr) -> "Poly":
        return cls(spec, [spec.element(c) if not isinstance(c, (int, float)) else spec.element(int(c)) for c in arr])

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def _as_poly(spec, x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly(spec, [x])


def hensel_root(P: Poly, seed) -> FieldElement:
    spec = P.spec
    if spec.backend != "capped_padic":
        raise ValueError("hensel_root needs the capped_padic backend")
    x = spec.element(seed)
    dP = P.derivative()
    if P(x).val_bound()[0] < 1:
        raise NotSimpleRoot(f"seed {x} is not a root of P modulo p")
    lb, _ = dP(x).val_bound()
    if lb >= 1:
        raise NotSimpleRoot("P'(seed) vanishes modulo p: residue root is not simple")
    N = spec.precision
    for _ in range(2 * N.bit_length() + 4):
        r = P(x)
        if r.val_bound()[0] >= N:
            return x
        x = x - r / dP(x)
    if P(x).val_bound()[0] >= N:
        return x
    raise PrecisionExhausted("Newton iteration did not reach the target precision")


def field_sqrt(x: FieldElement) -> FieldElement:
    """A square root of x inside its own backend, or SquareRootFailure."""
    spec = x.spec
    if x.is_exact_zero():
        return x
    if isinstance(x, QElement):
        q = x.value
        if q < 0:
            raise SquareRootFailure(f"{q} is negative; it has no square root in Q (try the capped_padic backend)")
        n, d = isqrt(q.numerator), isqrt(q.denominator)
        if n * n != q.numerator or d * d != q.denominator:
            raise SquareRootFailure(f"{q} is not a square in Q (try the capped_padic backend)")
        return QElement(spec, Fraction(n, d))
    if isinstance(x, RatFuncElement):
        p = spec.p
        r = _fp.sqrt(_fp.mul(x.num, x.den, p), p)
        if r is None:
            raise SquareRootFailure(f"{x} is not a square in F_{p}(t)")
        return RatFuncElement(spec, r, x.den)
    assert isinstance(x, PadicElement)
    p = spec.p
    if x.u == 0:
        raise PrecisionExhausted("square root of an element that is zero at precision")
    if p == 2:
        raise SquareRootFailure("square roots are not supported for p = 2")
    if x.v % 2:
        raise SquareRootFailure(f"{x} has odd valuation; not a square")
    seed = next((s for s in range(1, p) if (s * s - x.u) % p == 0), None)
    if seed is None:
        raise SquareRootFailure(f"unit part of {x} is not a square modulo {p}")
    rel = x.prec - x.v
    sub = spec.with_precision(rel)
    unit = PadicElement(sub, 0, x.u, rel)
    root = hensel_root(Poly(sub, [-unit, 0, 1]), seed)
    half = x.v // 2
    return PadicElement(spec, half, root.u, half + rel)


def poly_divmod(A: Poly, B: Poly):
    """Euclidean division over an exact backend."""
    if B.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    spec = A.spec
    r = list(A.coeffs)
    q = [spec.zero()] * max(len(r) - len(B.coeffs) + 1, 0)
    lead = B.coeffs[-1].inverse()
    while len(r) >= len(B.coeffs) and r:
        c = r[-1] * lead
        k = len(r) - len(B.coeffs)
        q[k] = c
        for i, b in enumerate(B.coeffs):
            r[k + i] = r[k + i] - c * b
        r.pop()
        while r and r[-1].is_exact_zero():
            r.pop()
    return Poly(spec, q), Poly(spec, r)


def poly_gcd(A: Poly, B: Poly) -> Poly:
    while not B.is_zero():
        A, B = B, poly_divmod(A, B)[1]
    if A.is_zero():
        return A
    return Poly(A.spec, [c / A.coeffs[-1] for c in A.coeffs])
