"""JSON encodings of field elements, points, discs, matrices, groups and graphs."""

from __future__ import annotations

import json
import os
import re
from importlib import resources
from pathlib import Path as FsPath
from typing import Optional

from .berkline import BPoint, GDisc, Path
from .field import FieldSpec
from .logvalue import LogValue
from .moebius import Koebe, Moebius, from_koebe
from .poly import Poly
from .potential import RationalFn
from .schottky import Figure, MetricGraph, Word, word_str

INFINITY = "infinity"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def default_precision() -> Optional[int]:
    v = os.environ.get("BERK_DEFAULT_PRECISION")
    return int(v) if v else None


def parse_field(s) -> FieldSpec:
    if isinstance(s, FieldSpec):
        return s
    if isinstance(s, str) and s.strip().startswith("{"):
        s = json.loads(s)
    if isinstance(s, str):
        return FieldSpec.from_shorthand(s, default_precision())
    if s.get("backend") == "capped_padic" and s.get("precision") is None and default_precision():
        s = dict(s, precision=default_precision())
    return FieldSpec.from_json(s)


# -- elements and points ------------------------------------------------------

def elt(x) -> Optional[str]:
    return INFINITY if x is None else str(x)


def parse_elt(spec: FieldSpec, s):
    if isinstance(s, str) and s.strip().lower() in ("inf", INFINITY, "∞"):
        return None
    if isinstance(s, (int,)):
        return spec.element(s)
    return spec.element(str(s))


def point_to_json(x: BPoint):
    if x.center is None:
        return INFINITY
    return {"center": str(x.center), "logradius": x.e.to_json()}


_ETA = re.compile(r"^\s*eta\s*\((.*),([^,]*)\)\s*$")


def parse_point(spec: FieldSpec, obj) -> BPoint:
    """JSON form, "infinity", "eta(center, e)" or a bare element (type 1)."""
    if isinstance(obj, str):
        s = obj.strip()
        if s.startswith("{"):
            return parse_point(spec, json.loads(s))
        if s.lower() in ("inf", INFINITY, "∞"):
            return BPoint.infinity()
        m = _ETA.match(s)
        if m:
            return BPoint(spec.element(m.group(1).strip()), LogValue.parse(m.group(2)))
        return BPoint(spec.element(s))
    if isinstance(obj, int):
        return BPoint(spec.element(obj))
    return BPoint(spec.element(str(obj["center"])), LogValue.from_json(obj.get("logradius", "inf")))


def disc_to_json(D: GDisc):
    out = {"closed": D.closed, "contains_infinity": D.outer, "logradius": D.e.to_json()}
    if D.outer and D.center.is_exact_zero():
        out["center"] = INFINITY
    else:
        out["center"] = str(D.center)
    return out


_DISC = re.compile(r"^\s*D([+-])(_inf)?\s*\((.*),([^,]*)\)\s*$")


def parse_disc(spec: FieldSpec, obj) -> GDisc:
    """JSON form or "D+(c, e)", "D-(c, e)", "D+_inf(c, e)" (complement-type, contains infinity)."""
    if isinstance(obj, str):
        s = obj.strip()
        if s.startswith("{"):
            return parse_disc(spec, json.loads(s))
        m = _DISC.match(s)
        if not m:
            raise ValueError(f"cannot read disc {s!r}")
        return GDisc(spec.element(m.group(3).strip()), LogValue.parse(m.group(4)),
                     m.group(1) == "+", bool(m.group(2)))
    e = LogValue.from_json(obj["logradius"])
    closed = bool(obj.get("closed", True))
    if str(obj["center"]).lower() == INFINITY:
        return GDisc(spec.zero(), e, closed, True)
    return GDisc(spec.element(str(obj["center"])), e, closed, bool(obj.get("contains_infinity", False)))


def path_to_json(pth: Path):
    return [{"center": str(s.center), "e_from": s.e_from.to_json(), "e_to": s.e_to.to_json()}
            for s in pth.segments]


# -- matrices -----------------------------------------------------------------

def moebius_to_json(m: Moebius):
    return {k: str(v) for k, v in zip("abcd", m.entries())}


def koebe_to_json(k: Koebe):
    return {"alpha": elt(k.alpha), "alphaPrime": elt(k.alpha_prime), "beta": str(k.beta)}


def parse_matrix(spec: FieldSpec, obj) -> Moebius:
    """JSON {"a","b","c","d"}, {"koebe": {...}} or the text form "[a,b;c,d]"."""
    if isinstance(obj, str):
        s = obj.strip().replace("−", "-")
        if s.startswith("{"):
            return parse_matrix(spec, json.loads(s))
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"matrix must look like [a,b;c,d], got {obj!r}")
        rows = s[1:-1].split(";")
        cells = [c.strip() for r in rows for c in r.split(",")]
        if len(rows) != 2 or len(cells) != 4:
            raise ValueError(f"matrix must have 2 rows of 2 entries, got {obj!r}")
        return Moebius(*[spec.element(c) for c in cells], spec)
    if "koebe" in obj:
        k = obj["koebe"]
        return from_koebe(Koebe(parse_elt(spec, k["alpha"]), parse_elt(spec, k["alphaPrime"]),
                                spec.element(str(k["beta"]))))
    return Moebius(*[spec.element(str(obj[k])) for k in "abcd"], spec)


# -- groups -------------------------------------------------------------------

class Group:
    def __init__(self, spec: FieldSpec, gens, figure: Optional[Figure] = None, extras=None, name=""):
        self.spec = spec
        self.gens = gens
        self.figure = figure
        self.extras = extras or {}
        self.name = name


def figure_to_json(fig: Figure):
    out = {"figure": [{"plus": disc_to_json(a), "minus": disc_to_json(b)}
                      for a, b in zip(fig.plus, fig.plus_inv)]}
    out["lambdas"] = [l.to_json() for l in fig.lambdas] if fig.lambdas else None
    out["conjugator"] = moebius_to_json(fig.conjugator) if fig.conjugator else None
    return out


def load_group(obj, name="") -> Group:
    spec = parse_field(obj["field"])
    gens = [parse_matrix(spec, g) for g in obj["generators"]]
    fig = None
    if obj.get("figure"):
        fig = Figure([parse_disc(spec, d["plus"]) for d in obj["figure"]],
                     [parse_disc(spec, d["minus"]) for d in obj["figure"]])
    extras = {k: parse_matrix(spec, v) for k, v in (obj.get("elements") or {}).items()}
    return Group(spec, gens, fig, extras, name)


def group_to_json(G: Group):
    out = {"field": G.spec.to_json(), "generators": [moebius_to_json(m) for m in G.gens]}
    if G.figure is not None:
        out["figure"] = figure_to_json(G.figure)["figure"]
    if G.extras:
        out["elements"] = {k: moebius_to_json(v) for k, v in G.extras.items()}
    return out


FIXTURES = ("tate.json", "hyperelliptic7.json", "genus3_p5.json", "asm_fpt.json")


def fixture_path(name: str):
    return resources.files("berk") / "fixtures" / name


def read_group_file(path: str) -> Group:
    p = FsPath(path)
    if p.exists():
        text = p.read_text()
    elif path in FIXTURES or path + ".json" in FIXTURES:
        text = fixture_path(path if path.endswith(".json") else path + ".json").read_text()
    else:
        raise FileNotFoundError(f"no such group file: {path}")
    return load_group(json.loads(text), p.name)


# -- polynomials and graphs ---------------------------------------------------

def parse_poly(spec: FieldSpec, obj) -> Poly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Poly(spec, [spec.element(c if isinstance(c, int) else str(c)) for c in obj])


def rational_fn(spec, num, den=None) -> RationalFn:
    return RationalFn(parse_poly(spec, num), parse_poly(spec, den) if den is not None else None)


def graph_to_json(g: MetricGraph):
    return {
        "vertices": [{"id": v, "point": point_to_json(pt) if pt is not None else None} for v, pt in g.vertices],
        "edges": [{"u": a, "v": b, "loglength": L.to_json()} for a, b, L in g.edges],
        "betti": g.betti(),
    }


def graph_from_json(spec, obj) -> MetricGraph:
    return MetricGraph(
        [(v["id"], parse_point(spec, v["point"]) if v.get("point") is not None else None) for v in obj["vertices"]],
        [(e["u"], e["v"], LogValue.from_json(e["loglength"])) for e in obj["edges"]],
    )


def word_to_json(w: Word) -> str:
    return word_str(w)
