# Dense polynomials over F_p as tuples of ints, ascending degree, no trailing zeros.

from __future__ import annotations

from typing import Optional, Tuple

FpPoly = Tuple[int, ...]


def trim(c, p: int) -> FpPoly:
    c = [x % p for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(a: FpPoly) -> int:
    return len(a) - 1


def add(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def neg(a: FpPoly, p: int) -> FpPoly:
    return trim([-x for x in a], p)


def sub(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    return add(a, neg(b, p), p)


def mul(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def scale(a: FpPoly, c: int, p: int) -> FpPoly:
    return trim([x * c for x in a], p)


def divmod_(a: FpPoly, b: FpPoly, p: int) -> Tuple[FpPoly, FpPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    while len(r) >= len(b) and r:
        c = r[-1] * inv % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        while r and r[-1] == 0:
            r.pop()
    return trim(q, p), tuple(r)


def monic(a: FpPoly, p: int) -> FpPoly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    while b:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p)


def ord_t(a: FpPoly) -> Optional[int]:
    for i, x in enumerate(a):
        if x:
            return i
    return None


def sqrt(a: FpPoly, p: int) -> Optional[FpPoly]:
    """Exact square root in F_p[t] (p odd), or None."""
    if not a:
        return ()
    if p == 2 or deg(a) % 2:
        return None
    lead_root = _fp_sqrt(a[-1], p)
    if lead_root is None:
        return None
    n = deg(a) // 2
    # determine the root top-down, like long division
    root = [0] * (n + 1)
    root[n] = lead_root
    inv2r = pow(2 * lead_root, -1, p)
    for k in range(n - 1, -1, -1):
        # coefficient of t^(n+k) in root^2 must equal a[n+k]
        s = sum(root[i] * root[n + k - i] for i in range(k + 1, n + 1) if 0 <= n + k - i <= n)
        root[k] = (a[n + k] - s) * inv2r % p
    r = trim(root, p)
    return r if mul(r, r, p) == a else None


def _fp_sqrt(x: int, p: int) -> Optional[int]:
    x %= p
    for y in range(p):
        if y * y % p == x:
            return y
    return None


def to_str(a: FpPoly, var: str = "t") -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)
