"""Schottky figures, reduced words, limit-set covers, skeleta and ping-pong."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .berkline import (
    BPoint, GDisc, Path, disc_subset, discs_disjoint, in_disc,
    join, leq, length, path, point_eq, tidy_disc,
)
from .errors import (
    BasePointNotInDomain, Inconclusive, InternalInconsistency, NotLoxodromic,
    PrecisionExhausted, SearchFailed,
)
from .logvalue import LogValue
from .moebius import (
    Moebius, apply_disc, apply_point, compose, ford_discs, inverse, is_loxodromic,
    is_zero, koebe, proj_eq,
)

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]


# -- words --------------------------------------------------------------------

def letter_key(l: Letter):
    return (l[0], -l[1])


def letters(g: int) -> List[Letter]:
    return sorted(((i, e) for i in range(g) for e in (1, -1)), key=letter_key)


def word_key(w: Word):
    return (len(w), [letter_key(l) for l in w])


def is_reduced(w: Word) -> bool:
    return all(not (w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1]) for k in range(len(w) - 1))


def reduce_word(w) -> Word:
    out: List[Letter] = []
    for l in w:
        if out and out[-1][0] == l[0] and out[-1][1] == -l[1]:
            out.pop()
        else:
            out.append(tuple(l))
    return tuple(out)


def inverse_word(w: Word) -> Word:
    return tuple((i, -e) for i, e in reversed(w))


def enumerate_words(g: int, n: int) -> Iterator[Word]:
    """All reduced words of length 1..n in shortlex order."""
    level: List[Word] = [()]
    alphabet = letters(g)
    for _ in range(n):
        nxt = []
        for w in level:
            for l in alphabet:
                if w and w[-1][0] == l[0] and w[-1][1] == -l[1]:
                    continue
                nxt.append(w + (l,))
        yield from nxt
        level = nxt


def words_of_length(g: int, k: int) -> List[Word]:
    return [w for w in enumerate_words(g, k) if len(w) == k]


def word_str(w: Word) -> str:
    if not w:
        return "id"
    return "*".join(f"g{i + 1}" if e == 1 else f"g{i + 1}^-1" for i, e in w)


def parse_word(s: str) -> Word:
    s = s.strip()
    if s in ("", "id"):
        return ()
    out = []
    for part in s.split("*"):
        part = part.strip()
        base, _, exp = part.partition("^")
        if not base.startswith("g"):
            raise ValueError(f"bad letter {part!r}")
        i = int(base[1:]) - 1
        k = int(exp) if exp else 1
        if k == 0 or i < 0:
            raise ValueError(f"bad letter {part!r}")
        out.extend([(i, 1 if k > 0 else -1)] * abs(k))
    return reduce_word(out)


def letter_matrix(gens: Sequence[Moebius], l: Letter) -> Moebius:
    return gens[l[0]] if l[1] == 1 else inverse(gens[l[0]])


def word_matrix(w: Word, gens: Sequence[Moebius]) -> Moebius:
    m = Moebius.identity(gens[0].spec)
    for l in w:
        m = compose(m, letter_matrix(gens, l))
    return m


# -- figures ------------------------------------------------------------------

@dataclass
class Figure:
    plus: List[GDisc]        # D+(g_i)
    plus_inv: List[GDisc]    # D+(g_i^-1)
    lambdas: Optional[List[LogValue]] = None
    conjugator: Optional[Moebius] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def disc(self, l: Letter) -> GDisc:
        return self.plus[l[0]] if l[1] == 1 else self.plus_inv[l[0]]

    def all_discs(self) -> List[Tuple[Letter, GDisc]]:
        return [(l, self.disc(l)) for l in letters(len(self.plus))]

    @property
    def genus(self) -> int:
        return len(self.plus)


@dataclass
class Report:
    ok: bool
    violations: List[str]
    minus: Dict[Letter, GDisc] = field(default_factory=dict)


def letter_name(l: Letter) -> str:
    return word_str((l,))


def minus_disc(gens, fig: Figure, l: Letter) -> GDisc:
    """D-(g^e) = g^e(P^1 - D+(g^-e))."""
    return apply_disc(letter_matrix(gens, l), fig.disc((l[0], -l[1])).complement())


def verify_figure(gens: Sequence[Moebius], fig: Figure) -> Report:
    violations = []
    g = len(gens)
    if len(fig.plus) != g or len(fig.plus_inv) != g:
        return Report(False, [f"figure has {len(fig.plus)} disc pairs for {g} generators"])
    for i, m in enumerate(gens):
        if not is_loxodromic(m):
            violations.append(f"generator g{i + 1} is not loxodromic")
    discs = fig.all_discs()
    for a in range(len(discs)):
        for b in range(a + 1, len(discs)):
            (la, da), (lb, db) = discs[a], discs[b]
            if not discs_disjoint(da, db):
                violations.append(f"discs D+({letter_name(la)}) and D+({letter_name(lb)}) intersect")
    minus = {}
    for l, dp in discs:
        img = minus_disc(gens, fig, l)
        minus[l] = img
        name = letter_name(l)
        if img.closed:
            violations.append(f"image of the complement of D+({letter_name((l[0], -l[1]))}) under {name} is not open")
        elif not disc_subset(img, dp):
            violations.append(f"D-({name}) is not contained in D+({name})")
        elif not point_eq(img.boundary(), dp.boundary()):
            violations.append(f"D-({name}) is not a maximal open disc of D+({name})")
    return Report(not violations, violations, minus)


def _lambda_grid(limit=6, step=Fraction(1, 2)) -> List[LogValue]:
    out = [LogValue(0)]
    k = step
    while k <= limit:
        out += [LogValue(-k), LogValue(k)]
        k += step
    return out


DEFAULT_GRID = _lambda_grid()


def _conjugate(gens, s: Moebius) -> List[Moebius]:
    si = inverse(s)
    return [compose(compose(s, m), si) for m in gens]


def _ford_pair(m: Moebius, lam: LogValue) -> Tuple[GDisc, GDisc]:
    # D+(g) is the twisted Ford disc of (g^-1, 1/lambda), centred at a/c;
    # D+(g^-1) is that of (g, lambda), centred at -d/c
    return ford_discs(inverse(m), -lam)[0], ford_discs(m, lam)[0]


def _search(gens, grid) -> Optional[Figure]:
    g = len(gens)
    options = []
    for i, m in enumerate(gens):
        opts = []
        for lam in grid:
            try:
                plus, plus_inv = _ford_pair(m, lam)
                if verify_figure([m], Figure([plus], [plus_inv])).ok:
                    opts.append((lam, plus, plus_inv))
            except PrecisionExhausted:
                continue
        if not opts:
            return None
        options.append(opts)

    chosen: List[tuple] = []

    def compatible(cand) -> bool:
        for prev in chosen:
            for d1 in cand[1:]:
                for d2 in prev[1:]:
                    if not discs_disjoint(d1, d2):
                        return False
        return True

    def backtrack(i) -> Optional[Figure]:
        if i == g:
            fig = Figure([c[1] for c in chosen], [c[2] for c in chosen], [c[0] for c in chosen])
            return fig if verify_figure(gens, fig).ok else None
        for cand in options[i]:
            try:
                ok = compatible(cand)
            except PrecisionExhausted:
                ok = False
            if ok:
                chosen.append(cand)
                found = backtrack(i + 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return backtrack(0)


def _conjugation_points(spec, count=12):
    p = spec.p
    out = [spec.element(r) for r in range(p)]
    pi = spec.uniformizer()
    for k in range(1, count):
        out += [pi ** (-k), pi ** k, 1 + pi ** (-k)]
    return out


def _fixed_points(m: Moebius):
    k = koebe(m)
    return [k.alpha, k.alpha_prime]


def find_figure(gens: Sequence[Moebius], grid: Optional[Sequence] = None) -> Figure:
    grid = [LogValue.coerce(x) for x in (grid if grid is not None else DEFAULT_GRID)]
    gens = list(gens)
    for i, m in enumerate(gens):
        if not is_loxodromic(m):
            raise NotLoxodromic(f"generator g{i + 1} is not loxodromic")
    if all(not is_zero(m.c) for m in gens):
        fig = _search(gens, grid)
        if fig is not None:
            return fig
    spec = gens[0].spec
    fixed = [z for m in gens for z in _fixed_points(m)]
    for z0 in _conjugation_points(spec):
        if any(z is not None and (z - z0).is_exact_zero() for z in fixed):
            continue
        # s(z) = 1/(z - z0) sends z0 to infinity
        s = Moebius(0, 1, 1, -z0, spec)
        conj = _conjugate(gens, s)
        try:
            if any(is_zero(m.c) for m in conj):
                continue
            fig = _search(conj, grid)
        except PrecisionExhausted:
            continue
        if fig is None:
            continue
        si = inverse(s)
        back = Figure([apply_disc(si, d) for d in fig.plus], [apply_disc(si, d) for d in fig.plus_inv],
                      fig.lambdas, s)
        if verify_figure(gens, back).ok:
            return back
    raise SearchFailed("no twisted Ford figure found on the grid (this does not show the group is not Schottky)")


# -- word discs and limit covers ----------------------------------------------

def word_disc(w: Word, gens, fig: Figure, sign: str = "+") -> GDisc:
    if not w:
        raise ValueError("word_disc needs a nonempty word")
    last = w[-1]
    base = fig.disc(last) if sign == "+" else minus_disc(gens, fig, last)
    for l in reversed(w[:-1]):
        base = apply_disc(letter_matrix(gens, l), base)
    return base


def _cover_levels(gens, fig: Figure, depth: int, sign: str):
    """Yield (k, [(word, disc)]) for word lengths k = 1..depth, extending on the left."""
    g = len(gens)
    mats = {l: letter_matrix(gens, l) for l in letters(g)}
    if sign == "+":
        level = [((l,), fig.disc(l)) for l in letters(g)]
    else:
        level = [((l,), minus_disc(gens, fig, l)) for l in letters(g)]
    yield 1, level
    for k in range(2, depth + 1):
        nxt = []
        for w, D in level:
            for l in letters(g):
                if l[0] == w[0][0] and l[1] == -w[0][1]:
                    continue
                nxt.append(((l,) + w, tidy_disc(apply_disc(mats[l], D))))
        nxt.sort(key=lambda t: word_key(t[0]))
        level = nxt
        yield k, level


def limit_cover(gens, fig: Figure, n: int) -> List[Tuple[Word, GDisc]]:
    """Words of length n+1 with their open discs D-(w); the union covers the limit set."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = None
    for k, level in _cover_levels(gens, fig, n + 1, "-"):
        out = level
    return out


def fixed_point_of_word(w: Word, gens):
    return koebe(word_matrix(w, gens)).alpha


def chart(gens, fig: Figure) -> Moebius:
    """A map z -> 1/(z - z0) with z0 outside every closed figure disc.

    In this chart all word discs are ordinary discs, so their radii compare."""
    spec = gens[0].spec
    discs = [d for _, d in fig.all_discs()]
    candidates = list(_conjugation_points(spec))
    for d in discs:
        if d.e.is_rational and d.e.a.denominator == 1:
            k = int(d.e.a)
            for j in (k - 1, k, k + 1):
                for r in range(spec.p):
                    candidates.append(d.center + spec.one().shift(j) * r)
    for z0 in candidates:
        try:
            x = BPoint(z0)
            if not any(in_disc(x, d) for d in discs):
                return Moebius(0, 1, 1, -z0, spec)
        except PrecisionExhausted:
            continue
    raise BasePointNotInDomain("could not find a k-rational point outside the figure discs")


def _in_chart(gens, fig: Figure):
    s = chart(gens, fig)
    cgens = _conjugate(gens, s)
    cfig = Figure([apply_disc(s, d) for d in fig.plus], [apply_disc(s, d) for d in fig.plus_inv])
    return cgens, cfig


def _letter_gains(cgens, cfig: Figure):
    """K[l][l2]: log-radius added when l acts on a disc inside D+(l2), in the chart.

    The pole of l lies outside the closed disc D+(l2), so |c z + d| is constant
    there and the gain does not depend on which subdisc is moved.  None when
    that cannot be confirmed."""
    gains = {}
    for l in letters(len(cgens)):
        m = letter_matrix(cgens, l)
        dv = m.det().val()
        row = {}
        for l2 in letters(len(cgens)):
            if l2 == (l[0], -l[1]):
                continue
            D = cfig.disc(l2)
            w = m.c * D.center + m.d
            wv, exact = w.val_bound()
            if D.outer or not exact or w.is_exact_zero() or not wv < D.e + m.c.val_bound()[0]:
                return None
            row[l2] = dv - wv * 2
        gains[l] = row
    return gains


def radius_profile(gens, fig: Figure, nmax: int) -> List[LogValue]:
    """min over |w| = n of the chart log-radius of D+(w), for n = 1..nmax."""
    cgens, cfig = _in_chart(gens, fig)
    gains = _letter_gains(cgens, cfig)
    if gains is None:
        return _radius_profile_enum(cgens, cfig, nmax)
    best = {l: cfig.disc(l).e for l in letters(len(gens))}   # min over words starting with l
    out = [min(best.values())]
    for _ in range(2, nmax + 1):
        best = {l: min(best[l2] + k for l2, k in row.items()) for l, row in gains.items()}
        out.append(min(best.values()))
    return out


def _radius_profile_enum(cgens, cfig: Figure, nmax: int) -> List[LogValue]:
    out = []
    for k, level in _cover_levels(cgens, cfig, nmax, "+"):
        es = []
        for w, D in level:
            if D.outer:
                raise InternalInconsistency(f"word disc of {word_str(w)} contains the chart's infinity")
            es.append(D.e)
        out.append(min(es))
    return out


# -- ping-pong ----------------------------------------------------------------

@dataclass(frozen=True)
class Expressed:
    kind: str                    # identity | word | not_in_group | inconclusive
    word: Optional[Word] = None

    def __str__(self):
        if self.kind == "word":
            return word_str(self.word)
        return {"identity": "Identity", "not_in_group": "NotInGroup", "inconclusive": "Inconclusive"}[self.kind]


def _midpoint(pth: Path) -> BPoint:
    half = length(pth).halve()
    for seg in pth.segments:
        L = seg.loglength()
        if half <= L:
            e = seg.e_from - half if seg.e_to < seg.e_from else seg.e_from + half
            return BPoint(seg.center, e)
        half = half - L
    return pth.end()


def base_point(gens, fig: Figure) -> BPoint:
    discs = [d for _, d in fig.all_discs()]
    s = chart(gens, fig)
    si = inverse(s)
    pairs = [(fig.plus[0], fig.plus_inv[0])]
    pairs += [(a, b) for i, a in enumerate(discs) for b in discs[i + 1:]]
    for a, b in pairs:
        x, y = apply_point(s, a.boundary()), apply_point(s, b.boundary())
        mid = apply_point(si, _midpoint(path(x, y)))
        if not any(in_disc(mid, d) for d in discs):
            return mid
    raise BasePointNotInDomain("every candidate base point lies in a figure disc")


def _pingpong(gens, fig: Figure):
    """Base point, D- discs and inverse letters, computed once per (gens, fig)."""
    key = tuple(tuple(m.entries()) for m in gens)
    ctx = fig._cache.get(key)
    if ctx is None:
        ls = letters(len(gens))
        ctx = (base_point(gens, fig), {l: minus_disc(gens, fig, l) for l in ls},
               {l: inverse(letter_matrix(gens, l)) for l in ls})
        fig._cache[key] = ctx
    return ctx


def express_in_group(m: Moebius, gens, fig: Figure, max_len: int = 64, x0: Optional[BPoint] = None,
                     minus: Optional[Dict[Letter, GDisc]] = None) -> Expressed:
    bx, bminus, invs = _pingpong(gens, fig)
    x0 = bx if x0 is None else x0
    minus = bminus if minus is None else minus
    ls = letters(len(gens))
    word: List[Letter] = []
    for _ in range(max_len + 1):
        y = apply_point(m, x0)
        hit = next((l for l in ls if in_disc(y, minus[l])), None)
        if hit is None:
            if proj_eq(m, Moebius.identity(m.spec)):
                return Expressed("identity", ()) if not word else Expressed("word", tuple(word))
            return Expressed("not_in_group")
        if len(word) == max_len:
            break
        word.append(hit)
        m = compose(invs[hit], m)
    return Expressed("inconclusive")


def normalizes(m: Moebius, gens, fig: Figure, max_len: int = 64) -> bool:
    mi = inverse(m)
    for i, gi in enumerate(gens):
        for conj in (compose(compose(m, gi), mi), compose(compose(mi, gi), m)):
            r = express_in_group(conj, gens, fig, max_len)
            if r.kind == "inconclusive":
                raise Inconclusive(f"conjugate of g{i + 1} not resolved within {max_len} letters")
            if r.kind == "not_in_group":
                return False
    return True


# -- metric graphs and skeleta ------------------------------------------------

@dataclass
class MetricGraph:
    vertices: List[Tuple[str, Optional[BPoint]]] = field(default_factory=list)
    edges: List[Tuple[str, str, LogValue]] = field(default_factory=list)

    def vertex_ids(self):
        return [v for v, _ in self.vertices]

    def degree(self, v: str) -> int:
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def components(self) -> int:
        parent = {v: v for v in self.vertex_ids()}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, w, _ in self.edges:
            parent[find(u)] = find(w)
        return len({find(v) for v in parent})

    def betti(self) -> int:
        return len(self.edges) - len(self.vertices) + self.components()

    def suppress_degree_two(self, keep=()) -> "MetricGraph":
        verts = list(self.vertices)
        edges = list(self.edges)
        changed = True
        while changed:
            changed = False
            for v, _ in verts:
                if v in keep:
                    continue
                inc = [k for k, (a, b, _) in enumerate(edges) if a == v or b == v]
                if len(inc) != 2:
                    continue
                e1, e2 = edges[inc[0]], edges[inc[1]]
                if e1[0] == e1[1] or e2[0] == e2[1]:
                    continue
                o1 = e1[1] if e1[0] == v else e1[0]
                o2 = e2[1] if e2[0] == v else e2[0]
                merged = (o1, o2, e1[2] + e2[2])
                edges = [e for k, e in enumerate(edges) if k not in inc] + [merged]
                verts = [x for x in verts if x[0] != v]
                changed = True
                break
        return MetricGraph(verts, edges)


def fundamental_skeleton(gens, fig: Figure, suppress: bool = True) -> MetricGraph:
    """Convex hull of the 2g boundary points, as a tree with Steiner vertices."""
    s = chart(gens, fig)
    si = inverse(s)
    leaves = [(f"D+({letter_name(l)})", apply_point(s, d.boundary())) for l, d in fig.all_discs()]
    verts = list(leaves)
    steiner = 0
    for i in range(len(leaves)):
        for j in range(i + 1, len(leaves)):
            jn = join(leaves[i][1], leaves[j][1])
            if not any(point_eq(jn, v) for _, v in verts):
                steiner += 1
                verts.append((f"x{steiner}", jn))
    edges = []
    for vid, v in verts:
        best = None
        for uid, u in verts:
            if uid == vid or point_eq(u, v) or not leq(v, u):
                continue
            if best is None or u.e > best[1].e:
                best = (uid, u)
        if best is not None:
            edges.append((best[0], vid, v.e - best[1].e))
    graph = MetricGraph([(vid, apply_point(si, v)) for vid, v in verts], edges)
    if suppress:
        graph = graph.suppress_degree_two(keep={vid for vid, _ in leaves})
        graph = _renumber_steiner(graph)
    return graph


def _renumber_steiner(g: MetricGraph) -> MetricGraph:
    ren = {}
    k = 0
    for v, _ in g.vertices:
        if v.startswith("x"):
            k += 1
            ren[v] = f"x{k}"
    f = lambda v: ren.get(v, v)
    return MetricGraph([(f(v), pt) for v, pt in g.vertices], [(f(a), f(b), L) for a, b, L in g.edges])


def quotient_skeleton(gens, fig: Figure, suppress: bool = True) -> MetricGraph:
    tree = fundamental_skeleton(gens, fig)
    ren = {}
    for i in range(len(gens)):
        ren[f"D+({letter_name((i, -1))})"] = f"D+({letter_name((i, 1))})"
    f = lambda v: ren.get(v, v)
    verts = [(v, pt) for v, pt in tree.vertices if v not in ren]
    edges = [(f(a), f(b), L) for a, b, L in tree.edges]
    graph = MetricGraph(verts, edges)
    if suppress:
        graph = graph.suppress_degree_two()
    return graph


def genus(gens, fig: Figure) -> int:
    b = quotient_skeleton(gens, fig).betti()
    if b != len(gens):
        raise InternalInconsistency(f"quotient skeleton has Betti number {b}, expected {len(gens)}")
    return b


def chart_cover(gens, fig: Figure, depth: int, sign: str = "-") -> List[List[Tuple[Word, LogValue]]]:
    """Word discs of lengths 1..depth with their log-radii measured in the chart."""
    cgens, cfig = _in_chart(gens, fig)
    return [[(w, D.e) for w, D in level] for _, level in _cover_levels(cgens, cfig, depth, sign)]
