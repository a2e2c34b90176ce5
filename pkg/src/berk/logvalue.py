"""Exact elements a + b*sqrt(2) of the ordered additive group of log-radii.

Valuations and log-radii use the additive convention: a radius r is stored
as e with r = p**(-e).  So a larger LogValue means a smaller radius.  The
sqrt(2) part carries radii outside p**Q (type-3 points); ``b == 0`` is the
decidable test for membership in the divisible value group.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as a rational")


def _sign_a_plus_b_sqrt2(a: Fraction, b: Fraction) -> int:
    # exact: compare a^2 with 2 b^2 when the signs disagree
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    lhs, rhs = a * a, 2 * b * b
    # lhs != rhs since sqrt(2) is irrational
    if a > 0:
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


@total_ordering
class LogValue:
    __slots__ = ("a", "b", "inf")

    def __init__(self, a: Number = 0, b: Number = 0, inf: int = 0):
        if inf:
            self.a = Fraction(0)
            self.b = Fraction(0)
            self.inf = 1 if inf > 0 else -1
        else:
            self.a = _frac(a)
            self.b = _frac(b)
            self.inf = 0

    @classmethod
    def coerce(cls, x) -> "LogValue":
        if isinstance(x, LogValue):
            return x
        return cls(_frac(x))

    @property
    def is_finite(self) -> bool:
        return self.inf == 0

    @property
    def is_rational(self) -> bool:
        return self.inf == 0 and self.b == 0

    def sign(self) -> int:
        if self.inf:
            return self.inf
        return _sign_a_plus_b_sqrt2(self.a, self.b)

    def compare(self, other) -> int:
        """-1, 0 or 1 as self is less than, equal to or greater than other."""
        other = LogValue.coerce(other)
        if self.inf or other.inf:
            return (self.inf > other.inf) - (self.inf < other.inf)
        return _sign_a_plus_b_sqrt2(self.a - other.a, self.b - other.b)

    def __eq__(self, other) -> bool:
        try:
            other = LogValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self.inf == other.inf and self.a == other.a and self.b == other.b

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.inf))

    def __add__(self, other) -> "LogValue":
        other = LogValue.coerce(other)
        if self.inf or other.inf:
            if self.inf and other.inf and self.inf != other.inf:
                raise ArithmeticError("+inf + -inf is undefined")
            return LogValue(inf=self.inf or other.inf)
        return LogValue(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "LogValue":
        if self.inf:
            return LogValue(inf=-self.inf)
        return LogValue(-self.a, -self.b)

    def __sub__(self, other) -> "LogValue":
        return self + (-LogValue.coerce(other))

    def __rsub__(self, other) -> "LogValue":
        return LogValue.coerce(other) - self

    def scale(self, q: Number) -> "LogValue":
        q = _frac(q)
        if self.inf:
            if q == 0:
                raise ArithmeticError("0 * inf is undefined")
            return LogValue(inf=self.inf if q > 0 else -self.inf)
        return LogValue(self.a * q, self.b * q)

    def __mul__(self, q) -> "LogValue":
        if isinstance(q, LogValue):
            return NotImplemented
        return self.scale(q)

    __rmul__ = __mul__

    def halve(self) -> "LogValue":
        return self.scale(Fraction(1, 2))

    def __abs__(self) -> "LogValue":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        if self.inf:
            return float("inf") * self.inf
        return float(self.a) + float(self.b) * 2 ** 0.5

    def __repr__(self) -> str:
        return f"LogValue({self})"

    def __str__(self) -> str:
        if self.inf:
            return "inf" if self.inf > 0 else "-inf"
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt2"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt2"

    def to_json(self):
        if self.inf:
            return "inf" if self.inf > 0 else "-inf"
        return {"a": _fmt(self.a), "b": _fmt(self.b)}

    @classmethod
    def parse(cls, s: str) -> "LogValue":
        """Inverse of str(): "inf", "-inf", "a", "b*sqrt2" or "a + b*sqrt2"."""
        s = s.strip().replace("−", "-").replace(" ", "")
        if s in ("inf", "+inf"):
            return INF
        if s == "-inf":
            return NEG_INF
        m = re.fullmatch(r"(?:([-+]?[\d/]+)(?=[-+]|$))?(?:([-+]?)([\d/]*)\*?sqrt2)?", s)
        if not m or not s:
            raise ValueError(f"not a log-value: {s!r}")
        a = _frac(m.group(1)) if m.group(1) else Fraction(0)
        b = Fraction(0)
        if "sqrt2" in s:
            b = _frac(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(2) == "-":
                b = -b
        return cls(a, b)

    @classmethod
    def from_json(cls, obj) -> "LogValue":
        if isinstance(obj, str):
            return cls.parse(obj)
        if isinstance(obj, (int, Fraction)):
            return cls(obj)
        if isinstance(obj, dict):
            return cls(_frac(obj.get("a", 0)), _frac(obj.get("b", 0)))
        raise ValueError(f"not a LogValue encoding: {obj!r}")


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


INF = LogValue(inf=1)
NEG_INF = LogValue(inf=-1)
ZERO = LogValue(0)
SQRT2 = LogValue(0, 1)


def lv_min(*values) -> LogValue:
    return min(LogValue.coerce(v) for v in values)


def lv_max(*values) -> LogValue:
    return max(LogValue.coerce(v) for v in values)
