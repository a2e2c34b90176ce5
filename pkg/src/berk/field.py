"""Exact non-Archimedean fields: Q with a p-adic valuation, capped-precision
p-adics, and F_p(t) with the t-adic valuation.

Every backend normalizes the valuation so that the uniformizer (p, p, t) has
valuation 1.  Valuations are returned as :class:`LogValue` so that they can be
mixed freely with log-radii.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import _fp
from .errors import BackendMismatch, DivisionByZero, PrecisionExhausted
from .logvalue import INF, LogValue

BACKENDS = ("exact_q", "capped_padic", "ratfunc_fp")
DEFAULT_PRECISION = 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class FieldSpec:
    backend: str
    p: int
    precision: Optional[int] = None

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}; expected one of {BACKENDS}")
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.backend == "capped_padic":
            if self.precision is None:
                object.__setattr__(self, "precision", DEFAULT_PRECISION)
            if self.precision < 1:
                raise ValueError("precision must be >= 1")
        elif self.precision is not None:
            object.__setattr__(self, "precision", None)

    def __call__(self, x) -> "FieldElement":
        return self.element(x)

    def element(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if not self.compatible(x.spec):
                raise BackendMismatch(f"element of {x.spec} used in {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, (int, Fraction)):
            q = Fraction(x)
            if self.backend == "exact_q":
                return QElement(self, q)
            if self.backend == "capped_padic":
                return PadicElement.from_fraction(self, q, self.precision)
            num = _fp.trim([q.numerator], self.p)
            den = _fp.trim([q.denominator], self.p)
            if not den:
                raise DivisionByZero(f"{q} has denominator divisible by p = {self.p}")
            return RatFuncElement(self, num, den)
        raise TypeError(f"cannot convert {x!r} into {self}")

    def compatible(self, other: "FieldSpec") -> bool:
        return self.backend == other.backend and self.p == other.p

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def uniformizer(self) -> "FieldElement":
        if self.backend == "ratfunc_fp":
            return RatFuncElement(self, (0, 1), (1,))
        return self.element(self.p)

    def with_precision(self, precision: int) -> "FieldSpec":
        return FieldSpec(self.backend, self.p, precision)

    def parse(self, s: str) -> "FieldElement":
        s = s.strip().replace("−", "-")
        if self.backend == "exact_q":
            return QElement(self, Fraction(s.replace(" ", "")))
        if self.backend == "capped_padic":
            return PadicElement.parse(self, s)
        return RatFuncElement.parse(self, s)

    def to_json(self) -> dict:
        out = {"backend": self.backend, "p": self.p}
        if self.backend == "capped_padic":
            out["precision"] = self.precision
        return out

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if isinstance(obj, FieldSpec):
            return obj
        if isinstance(obj, str):
            return cls.from_shorthand(obj)
        return cls(obj["backend"], int(obj["p"]), obj.get("precision"))

    @classmethod
    def from_shorthand(cls, s: str, default_precision: Optional[int] = None) -> "FieldSpec":
        """``q7`` (Q at 7), ``qp7`` or ``qp7@40`` (7-adics), ``fp3t`` (F_3(t))."""
        s = s.strip().lower()
        m = re.fullmatch(r"qp(\d+)(?:@(\d+))?", s)
        if m:
            prec = int(m.group(2)) if m.group(2) else default_precision
            return cls("capped_padic", int(m.group(1)), prec)
        m = re.fullmatch(r"q(\d+)", s)
        if m:
            return cls("exact_q", int(m.group(1)))
        m = re.fullmatch(r"fp(\d+)t", s)
        if m:
            return cls("ratfunc_fp", int(m.group(1)))
        raise ValueError(f"unrecognised field shorthand {s!r}")

    def __str__(self) -> str:
        if self.backend == "capped_padic":
            return f"capped_padic(p={self.p}, N={self.precision})"
        return f"{self.backend}(p={self.p})"


class FieldElement:
    """Common operator plumbing.  Subclasses implement the ``_op`` hooks."""

    spec: FieldSpec

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if not self.spec.compatible(other.spec):
                raise BackendMismatch(f"cannot combine {self.spec} with {other.spec}")
            return other
        return self.spec.element(other)

    def __add__(self, other):
        return self._add(self._coerce(other))

    def __radd__(self, other):
        return self._coerce(other)._add(self)

    def __sub__(self, other):
        return self._add(-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other)._add(-self)

    def __mul__(self, other):
        return self._mul(self._coerce(other))

    def __rmul__(self, other):
        return self._coerce(other)._mul(self)

    def __truediv__(self, other):
        return self._mul(self._coerce(other).inverse())

    def __rtruediv__(self, other):
        return self._coerce(other)._mul(self.inverse())

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def val_bound(self) -> Tuple[LogValue, bool]:
        """(v, exact).  When exact is False the true valuation is only known to be >= v."""
        return self.val(), True

    def is_exact_zero(self) -> bool:
        raise NotImplementedError

    def shift(self, k: int) -> "FieldElement":
        """Multiply by pi**k without losing relative precision."""
        return self * self.spec.uniformizer() ** k

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class QElement(FieldElement):
    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: Fraction):
        self.spec = spec
        self.value = Fraction(value)

    def _add(self, other):
        return QElement(self.spec, self.value + other.value)

    def _mul(self, other):
        return QElement(self.spec, self.value * other.value)

    def __neg__(self):
        return QElement(self.spec, -self.value)

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero("inverse of 0")
        return QElement(self.spec, 1 / self.value)

    def is_exact_zero(self) -> bool:
        return self.value == 0

    def val(self) -> LogValue:
        if self.value == 0:
            return INF
        p = self.spec.p
        return LogValue(vp(self.value.numerator, p) - vp(self.value.denominator, p))

    def residue(self) -> int:
        if self.val() < 0:
            raise ValueError("residue of a non-integral element")
        p = self.spec.p
        return self.value.numerator * pow(self.value.denominator, -1, p) % p

    def lift(self) -> Fraction:
        return self.value

    def __eq__(self, other):
        if isinstance(other, QElement):
            return self.spec.compatible(other.spec) and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(("q", self.spec.p, self.value))

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


class PadicElement(FieldElement):
    """p^v * u + O(p^prec).

    ``prec is None`` marks an exact zero.  An inexact zero ("zero up to
    precision") has ``u == 0`` and ``v == prec``; its valuation is unknown
    beyond being at least ``prec``.
    """

    __slots__ = ("spec", "v", "u", "prec")

    def __init__(self, spec: FieldSpec, v: int, u: int, prec: Optional[int]):
        self.spec = spec
        self.v = v
        self.u = u
        self.prec = prec

    @classmethod
    def exact_zero(cls, spec):
        return cls(spec, 0, 0, None)

    @classmethod
    def from_fraction(cls, spec: FieldSpec, q: Fraction, prec: int) -> "PadicElement":
        if q == 0:
            return cls.exact_zero(spec)
        p = spec.p
        v = vp(q.numerator, p) - vp(q.denominator, p)
        if v >= prec:
            return cls(spec, prec, 0, prec)
        num = q.numerator // p ** max(v, 0)
        den = q.denominator // p ** max(-v, 0)
        mod = p ** (prec - v)
        return cls(spec, v, num * pow(den, -1, mod) % mod, prec)

    @classmethod
    def _normalize(cls, spec, m: int, s: int, prec: int) -> "PadicElement":
        # value p^m * s known modulo p^prec
        p = spec.p
        if prec <= m:
            return cls(spec, prec, 0, prec)
        s %= p ** (prec - m)
        if s == 0:
            return cls(spec, prec, 0, prec)
        k = vp(s, p)
        v = m + k
        return cls(spec, v, (s // p ** k) % p ** (prec - v), prec)

    def is_exact_zero(self) -> bool:
        return self.prec is None

    def shift(self, k: int) -> "PadicElement":
        if self.prec is None:
            return self
        return PadicElement(self.spec, self.v + k, self.u, self.prec + k)

    def is_zero_at_precision(self) -> bool:
        return self.prec is not None and self.u == 0

    def _add(self, other):
        if self.prec is None:
            return other
        if other.prec is None:
            return self
        prec = min(self.prec, other.prec)
        m = min(self.v, other.v)
        p = self.spec.p
        s = self.u * p ** (self.v - m) + other.u * p ** (other.v - m)
        return PadicElement._normalize(self.spec, m, s, prec)

    def _mul(self, other):
        if self.prec is None or other.prec is None:
            return PadicElement.exact_zero(self.spec)
        prec = min(self.prec + other.v, other.prec + self.v)
        v = self.v + other.v
        return PadicElement._normalize(self.spec, v, self.u * other.u, prec)

    def __neg__(self):
        if self.prec is None or self.u == 0:
            return self
        mod = self.spec.p ** (self.prec - self.v)
        return PadicElement(self.spec, self.v, (-self.u) % mod, self.prec)

    def inverse(self):
        if self.prec is None:
            raise DivisionByZero("inverse of exact 0")
        if self.u == 0:
            raise PrecisionExhausted(f"inverse of O({self.spec.p}^{self.prec})")
        r = self.prec - self.v
        mod = self.spec.p ** r
        return PadicElement(self.spec, -self.v, pow(self.u, -1, mod), -self.v + r)

    def val(self) -> LogValue:
        if self.prec is None:
            return INF
        if self.u == 0:
            raise PrecisionExhausted(f"valuation of O({self.spec.p}^{self.prec}) is undetermined")
        return LogValue(self.v)

    def val_bound(self):
        if self.prec is None:
            return INF, True
        if self.u == 0:
            return LogValue(self.prec), False
        return LogValue(self.v), True

    def residue(self) -> int:
        if self.prec is None:
            return 0
        if self.u == 0:
            if self.prec >= 1:
                return 0
            raise PrecisionExhausted("residue beyond precision")
        if self.v < 0:
            raise ValueError("residue of a non-integral element")
        return self.u % self.spec.p if self.v == 0 else 0

    def lift(self) -> Fraction:
        if self.prec is None or self.u == 0:
            return Fraction(0)
        return Fraction(self.u) * Fraction(self.spec.p) ** self.v

    def digits(self):
        p = self.spec.p
        u, out = self.u, []
        for _ in range(self.prec - self.v):
            out.append(u % p)
            u //= p
        return out

    def __eq__(self, other):
        if isinstance(other, PadicElement):
            return (self.spec.compatible(other.spec) and self.v == other.v
                    and self.u == other.u and self.prec == other.prec)
        return NotImplemented

    def __hash__(self):
        return hash(("padic", self.spec.p, self.v, self.u, self.prec))

    def __str__(self) -> str:
        p = self.spec.p
        if self.prec is None:
            return "0"
        if self.u == 0:
            return f"O({p}^{self.prec})"
        terms = []
        for i, d in enumerate(self.digits()):
            if d == 0 and i:
                continue
            terms.append(str(d) if i == 0 else (f"{d}*{p}" if i == 1 else f"{d}*{p}^{i}"))
        return f"{p}^{self.v} * ({' + '.join(terms)}) + O({p}^{self.prec})"

    _DIGIT_FORM = re.compile(
        r"^\s*(\d+)\^(-?\d+)\s*\*\s*\((.*)\)\s*\+\s*O\(\s*(\d+)\^(-?\d+)\s*\)\s*$")
    _BIG_O = re.compile(r"^\s*O\(\s*(\d+)\^(-?\d+)\s*\)\s*$")

    @classmethod
    def parse(cls, spec: FieldSpec, s: str) -> "PadicElement":
        p = spec.p
        m = cls._BIG_O.match(s)
        if m:
            _check_base(int(m.group(1)), p)
            n = int(m.group(2))
            return cls(spec, n, 0, n)
        m = cls._DIGIT_FORM.match(s)
        if not m:
            # a plain rational, taken at the default precision
            return cls.from_fraction(spec, Fraction(s.replace(" ", "")), spec.precision)
        _check_base(int(m.group(1)), p)
        _check_base(int(m.group(4)), p)
        v, prec = int(m.group(2)), int(m.group(5))
        u = 0
        for term in m.group(3).split("+"):
            term = term.strip()
            tm = re.fullmatch(r"(\d+)(?:\s*\*\s*(\d+)(?:\^(\d+))?)?", term)
            if not tm:
                raise ValueError(f"bad digit term {term!r} in {s!r}")
            d = int(tm.group(1))
            if tm.group(2) is None:
                k = 0
            else:
                _check_base(int(tm.group(2)), p)
                k = int(tm.group(3)) if tm.group(3) else 1
            u += d * p ** k
        return cls._normalize(spec, v, u, prec)


def _check_base(b: int, p: int):
    if b != p:
        raise ValueError(f"digit form uses base {b}, field has p = {p}")


class RatFuncElement(FieldElement):
    __slots__ = ("spec", "num", "den")

    def __init__(self, spec: FieldSpec, num, den):
        p = spec.p
        num, den = _fp.trim(num, p), _fp.trim(den, p)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            den = (1,)
        elif len(den) > 1:
            g = _fp.gcd(num, den, p)
            if len(g) > 1:
                num = _fp.divmod_(num, g, p)[0]
                den = _fp.divmod_(den, g, p)[0]
        c = pow(den[-1], -1, p)
        self.spec = spec
        self.num = _fp.scale(num, c, p)
        self.den = _fp.scale(den, c, p)

    def _add(self, other):
        p = self.spec.p
        num = _fp.add(_fp.mul(self.num, other.den, p), _fp.mul(other.num, self.den, p), p)
        return RatFuncElement(self.spec, num, _fp.mul(self.den, other.den, p))

    def _mul(self, other):
        p = self.spec.p
        return RatFuncElement(self.spec, _fp.mul(self.num, other.num, p), _fp.mul(self.den, other.den, p))

    def __neg__(self):
        return RatFuncElement(self.spec, _fp.neg(self.num, self.spec.p), self.den)

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of 0")
        return RatFuncElement(self.spec, self.den, self.num)

    def is_exact_zero(self) -> bool:
        return not self.num

    def val(self) -> LogValue:
        if not self.num:
            return INF
        return LogValue(_fp.ord_t(self.num) - _fp.ord_t(self.den))

    def residue(self) -> int:
        v = self.val()
        if v < 0:
            raise ValueError("residue of a non-integral element")
        if v > 0:
            return 0
        k = _fp.ord_t(self.num)
        p = self.spec.p
        return self.num[k] * pow(self.den[k], -1, p) % p

    def __eq__(self, other):
        if isinstance(other, RatFuncElement):
            return self.spec.compatible(other.spec) and self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self == self.spec.element(other)
        return NotImplemented

    def __hash__(self):
        return hash(("ratfunc", self.spec.p, self.num, self.den))

    def __str__(self) -> str:
        return f"({_fp.to_str(self.num)})/({_fp.to_str(self.den)})"

    @classmethod
    def parse(cls, spec: FieldSpec, s: str) -> "RatFuncElement":
        s = s.strip()
        m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
        if m:
            num, den = m.group(1), m.group(2)
        elif "/" in s and "(" not in s:
            num, den = s.split("/", 1)
        else:
            num, den = s, "1"
        return cls(spec, _parse_fp_poly(num, spec.p), _parse_fp_poly(den, spec.p))


def _parse_fp_poly(s: str, p: int):
    s = s.replace(" ", "").replace("-", "+-")
    coeffs = {}
    for term in s.split("+"):
        if not term:
            continue
        m = re.fullmatch(r"(-?\d*)\*?(t(?:\^(\d+))?)?", term)
        if not m or (not m.group(1) and not m.group(2)) or m.group(1) == "-" and not m.group(2):
            raise ValueError(f"bad polynomial term {term!r}")
        c = m.group(1)
        c = 1 if c in ("", None) else (-1 if c == "-" else int(c))
        k = 0 if not m.group(2) else (int(m.group(3)) if m.group(3) else 1)
        coeffs[k] = coeffs.get(k, 0) + c
    n = max(coeffs, default=-1) + 1
    return _fp.trim([coeffs.get(i, 0) for i in range(n)], p)
