"""DOT and SVG pictures of metric graphs and limit-set disc covers.

Layouts are fixed functions of the input, so output is byte-stable.  Circle
sizes in cover pictures are schematic only.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import List, Sequence, Tuple

from .logvalue import LogValue
from .schottky import MetricGraph

# radius compression for covers: a disc shrinks by exp(-C * (change in log-radius))
COVER_C = 0.35
SIZE = 400.0


def _f(x: float) -> str:
    return "%.3f" % x


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def graph_dot(g: MetricGraph, name: str = "skeleton") -> str:
    lines = [f"graph {name} {{"]
    for v, _ in g.vertices:
        lines.append(f'  "{v}";')
    for a, b, L in g.edges:
        lines.append(f'  "{a}" -- "{b}" [label="{L}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _circle_layout(n: int) -> List[Tuple[float, float]]:
    c = SIZE / 2
    if n == 1:
        return [(c, c)]
    r = SIZE * 0.35
    return [(c + r * math.cos(2 * math.pi * k / n - math.pi / 2),
             c + r * math.sin(2 * math.pi * k / n - math.pi / 2)) for k in range(n)]


def graph_svg(g: MetricGraph) -> str:
    pos = dict(zip([v for v, _ in g.vertices], _circle_layout(len(g.vertices))))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(SIZE)}" height="{int(SIZE)}" '
           f'viewBox="0 0 {int(SIZE)} {int(SIZE)}">']
    seen = defaultdict(int)
    for a, b, L in g.edges:
        key = tuple(sorted((a, b)))
        k = seen[key]
        seen[key] += 1
        (x1, y1), (x2, y2) = pos[a], pos[b]
        label = _esc(str(L))
        if a == b:
            r = 22.0 + 10.0 * k
            cx, cy = x1, y1 - r
            out.append(f'  <circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="none" stroke="black"/>')
            out.append(f'  <text x="{_f(cx)}" y="{_f(cy - r - 4)}" text-anchor="middle">{label}</text>')
            continue
        # parallel edges bend alternately to either side
        off = 0.0 if k == 0 else (30.0 * ((k + 1) // 2)) * (1 if k % 2 else -1)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        qx, qy = mx - dy / norm * off * 2, my + dx / norm * off * 2
        out.append(f'  <path d="M {_f(x1)} {_f(y1)} Q {_f(qx)} {_f(qy)} {_f(x2)} {_f(y2)}" '
                   f'fill="none" stroke="black"/>')
        lx, ly = (x1 + 2 * qx + x2) / 4, (y1 + 2 * qy + y2) / 4
        out.append(f'  <text x="{_f(lx)}" y="{_f(ly)}" text-anchor="middle">{label}</text>')
    for v, _ in g.vertices:
        x, y = pos[v]
        out.append(f'  <circle cx="{_f(x)}" cy="{_f(y)}" r="5.000" fill="black"/>')
        out.append(f'  <text x="{_f(x + 8)}" y="{_f(y - 8)}">{_esc(v)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cover_svg(levels: Sequence[Sequence[Tuple[str, LogValue]]]) -> str:
    """levels[k] lists (word, chart log-radius) for words of length k+1.

    Words of one level nest inside their prefixes on the previous level.
    Only the last level is labelled."""
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(SIZE)}" height="{int(SIZE)}" '
           f'viewBox="0 0 {int(SIZE)} {int(SIZE)}">']
    if not levels:
        out.append("</svg>")
        return "\n".join(out) + "\n"
    placed = {"": (SIZE / 2, SIZE / 2, SIZE * 0.48, None)}
    for depth, level in enumerate(levels):
        groups = defaultdict(list)
        for w, e in level:
            parent = w.rsplit("*", 1)[0] if "*" in w else ""
            groups[parent].append((w, e))
        last = depth == len(levels) - 1
        for parent in sorted(groups, key=lambda p: [x for x, _ in level].index(groups[p][0][0])):
            kids = groups[parent]
            px, py, pr, pe = placed[parent]
            n = len(kids)
            s = math.sin(math.pi / n) if n > 1 else 1.0
            fit = pr * s / (1 + s) * 0.92 if n > 1 else pr * 0.8
            ring = pr - fit / 0.92 if n > 1 else 0.0
            for k, (w, e) in enumerate(kids):
                r = fit
                if pe is not None:
                    r = min(fit, pr * math.exp(-COVER_C * float(e - pe)))
                ang = 2 * math.pi * k / n - math.pi / 2
                x, y = px + ring * math.cos(ang), py + ring * math.sin(ang)
                placed[w] = (x, y, r, e)
                out.append(f'  <circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r)}" fill="none" stroke="black"/>')
                if last:
                    out.append(f'  <text x="{_f(x)}" y="{_f(y)}" text-anchor="middle" '
                               f'font-size="{_f(max(4.0, min(12.0, r / 2)))}">{_esc(w)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
