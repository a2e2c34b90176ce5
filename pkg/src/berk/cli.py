"""Command-line front end: ``berk <command> ...``.

Exit codes: 0 success (including a figure that fails verification), 2 bad
input, 3 precision exhausted, 4 inconclusive or failed search.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import berkline as bl
from . import moebius as mb
from . import potential as pt
from . import render
from . import schottky as sk
from . import serialize as se
from .errors import BerkError, Inconclusive, PrecisionExhausted, SearchFailed
from .logvalue import LogValue
from .poly import hensel_root

EXIT_OK, EXIT_INPUT, EXIT_PRECISION, EXIT_UNDECIDED = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, fmt: str) -> str:
    if fmt == "text" and isinstance(obj, (str, int, bool)):
        return str(obj).lower() if isinstance(obj, bool) else str(obj)
    return se.dumps(obj)


# -- subcommand handlers: each returns the text to print ---------------------

def cmd_field(a):
    spec = se.parse_field(a.field)
    out = {"field": spec.to_json()}
    if a.element is not None:
        x = spec.element(a.element)
        v = x.val_bound()
        out["element"] = str(x)
        out["val"] = x.val().to_json() if v[1] else {"at_least": v[0].to_json()}
    if a.hensel is not None:
        coeffs = json.loads(a.hensel)
        r = hensel_root(se.parse_poly(spec, coeffs), spec.element(a.seed))
        out["root"] = str(r)
    return _emit(out, a.format)


def cmd_eval(a):
    spec = se.parse_field(a.field)
    x = se.parse_point(spec, a.point)
    out = {"point": se.point_to_json(x), "type": bl.classify(x)}
    if a.poly is not None:
        out["seminorm"] = bl.seminorm(se.parse_poly(spec, a.poly), x).to_json()
    return _emit(out, a.format)


def cmd_join(a):
    spec = se.parse_field(a.field)
    j = bl.join(se.parse_point(spec, a.x), se.parse_point(spec, a.y))
    return _emit(se.point_to_json(j), a.format)


def cmd_length(a):
    spec = se.parse_field(a.field)
    pth = bl.path(se.parse_point(spec, a.x), se.parse_point(spec, a.y))
    return _emit({"path": se.path_to_json(pth), "loglength": bl.length(pth).to_json()}, a.format)


def cmd_moebius(a):
    spec = se.parse_field(a.field)
    m = se.parse_matrix(spec, a.matrix)
    if a.op == "lox":
        return _emit(mb.is_loxodromic(m), a.format)
    if a.op == "koebe":
        return _emit(se.koebe_to_json(mb.koebe(m)), a.format)
    if a.op == "ford":
        closed, opened = mb.ford_discs(m, LogValue.parse(a.lam))
        return _emit({"closed": se.disc_to_json(closed), "open": se.disc_to_json(opened)}, a.format)
    if a.disc is not None:
        return _emit(se.disc_to_json(mb.apply_disc(m, se.parse_disc(spec, a.disc))), a.format)
    if a.point is not None:
        return _emit(se.point_to_json(mb.apply_point(m, se.parse_point(spec, a.point))), a.format)
    raise UsageError("moebius apply needs --point or --disc")


def _figure(G: se.Group) -> sk.Figure:
    return G.figure if G.figure is not None else sk.find_figure(G.gens)


def _target_matrix(G: se.Group, a):
    if a.matrix is not None:
        return se.parse_matrix(G.spec, a.matrix)
    if a.word is not None:
        return sk.word_matrix(sk.parse_word(a.word), G.gens)
    if a.element is not None:
        if a.element not in G.extras:
            raise UsageError(f"group file has no element named {a.element!r}")
        return G.extras[a.element]
    raise UsageError("give --matrix, --word or --element")


def _graph_out(g: sk.MetricGraph, fmt: str, name: str) -> str:
    if fmt == "dot":
        return render.graph_dot(g, name).rstrip("\n")
    if fmt == "svg":
        return render.graph_svg(g).rstrip("\n")
    return se.dumps(se.graph_to_json(g))


def cmd_schottky(a):
    G = se.read_group_file(a.file)
    op = a.op
    if op == "figure":
        return _emit(se.figure_to_json(sk.find_figure(G.gens)), a.format)
    fig = _figure(G)
    if op == "verify":
        rep = sk.verify_figure(G.gens, fig)
        return _emit({"ok": rep.ok, "violations": rep.violations,
                      "minus": {sk.letter_name(l): se.disc_to_json(d) for l, d in sorted(rep.minus.items(), key=lambda t: sk.letter_key(t[0]))}},
                     a.format)
    if op == "limit":
        if a.depth < 1:
            raise UsageError("--depth is a word length and must be >= 1")
        cover = sk.limit_cover(G.gens, fig, a.depth - 1)
        return _emit({"depth": a.depth, "count": len(cover),
                      "discs": [{"word": sk.word_str(w), "disc": se.disc_to_json(D)} for w, D in cover]}, a.format)
    if op == "skeleton":
        return _graph_out(sk.fundamental_skeleton(G.gens, fig), a.format, "skeleton")
    if op == "quotient":
        return _graph_out(sk.quotient_skeleton(G.gens, fig, suppress=not a.raw), a.format, "quotient")
    if op == "genus":
        return _emit(sk.genus(G.gens, fig), a.format)
    if op == "express":
        r = sk.express_in_group(_target_matrix(G, a), G.gens, fig, a.max_len)
        if r.kind == "inconclusive":
            raise Inconclusive(f"no verdict within {a.max_len} letters")
        return _emit(str(r), a.format)
    if op == "normalizes":
        return _emit(sk.normalizes(_target_matrix(G, a), G.gens, fig, a.max_len), a.format)
    raise UsageError(f"unknown schottky command {op}")


def _branch_target(spec, s):
    if s.strip().lower() in ("inf", "infinity", "∞", "out"):
        return None
    return spec.element(s)


def _branch_json(b):
    if b == "nonrational":
        return "nonrational"
    if b.outward:
        return "infinity"
    return str(b.rep)


def cmd_potential(a):
    spec = se.parse_field(a.field)
    F = se.rational_fn(spec, a.num, a.den)
    x = se.parse_point(spec, a.point)
    if a.op == "eval":
        return _emit(pt.eval_abs(F, x).to_json(), a.format)
    if a.op == "slope":
        if a.toward is None:
            raise UsageError("potential slope needs --toward")
        b = bl.branch_of(x, _branch_target(spec, a.toward))
        return _emit(pt.slope_along_branch(F, x, b), a.format)
    h = pt.harmonicity(F, x)
    return _emit({"support": [{"toward": _branch_json(b), "mu": mu} for b, mu in h.support], "sum": h.total},
                 a.format)


def cmd_render(a):
    G = se.read_group_file(a.file)
    fig = _figure(G)
    fmt = a.format if a.format in ("dot", "svg") else "svg"
    if a.what == "cover":
        if fmt != "svg":
            raise UsageError("covers render to svg only")
        levels = sk.chart_cover(G.gens, fig, a.depth)
        return render.cover_svg([[(sk.word_str(w), e) for w, e in lv] for lv in levels]).rstrip("\n")
    g = sk.fundamental_skeleton(G.gens, fig) if a.what == "skeleton" else sk.quotient_skeleton(G.gens, fig)
    return _graph_out(g, fmt, a.what)


# -- argument parsing ---------------------------------------------------------

FORMATS = ("json", "text", "dot", "svg")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="berk", description="Computations on the Berkovich projective line.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, field=True):
        if field:
            sp.add_argument("--field", required=True, help="q<p>, qp<p>[@N], fp<p>t or FieldSpec JSON")
        sp.add_argument("--format", choices=FORMATS, default="json")

    sp = sub.add_parser("field", help="describe a field, an element's valuation, or a Hensel root")
    common(sp)
    sp.add_argument("--element")
    sp.add_argument("--hensel", help="polynomial coefficients, ascending, as JSON")
    sp.add_argument("--seed", default="0")
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("eval", help="type of a point and the seminorm of a polynomial there")
    common(sp)
    sp.add_argument("--point", required=True)
    sp.add_argument("--poly", help="coefficients, ascending, as JSON")
    sp.set_defaults(func=cmd_eval)

    for name, fn in (("join", cmd_join), ("length", cmd_length)):
        sp = sub.add_parser(name)
        common(sp)
        sp.add_argument("--x", required=True)
        sp.add_argument("--y", required=True)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("moebius")
    sp.add_argument("op", choices=("apply", "koebe", "lox", "ford"))
    common(sp)
    sp.add_argument("--matrix", required=True, help='"[a,b;c,d]" or JSON')
    sp.add_argument("--point")
    sp.add_argument("--disc")
    sp.add_argument("--lambda", dest="lam", default="0", help="log-value l with lambda = p^-l")
    sp.set_defaults(func=cmd_moebius)

    sp = sub.add_parser("schottky")
    sp.add_argument("op", choices=("verify", "figure", "limit", "skeleton", "quotient", "genus", "express",
                                   "normalizes"))
    common(sp, field=False)
    sp.add_argument("--file", required=True, help="group JSON file or a shipped fixture name")
    sp.add_argument("--depth", type=int, default=2, help="word length of the cover")
    sp.add_argument("--raw", action="store_true", help="keep degree-2 vertices in the quotient")
    sp.add_argument("--matrix")
    sp.add_argument("--word")
    sp.add_argument("--element")
    sp.add_argument("--max-len", type=int, default=64)
    sp.set_defaults(func=cmd_schottky)

    sp = sub.add_parser("potential")
    sp.add_argument("op", choices=("slope", "harmonic", "eval"))
    common(sp)
    sp.add_argument("--num", required=True, help="numerator coefficients, ascending, as JSON")
    sp.add_argument("--den", help="denominator coefficients (default [1])")
    sp.add_argument("--point", required=True)
    sp.add_argument("--toward", help="branch target: an element or infinity")
    sp.set_defaults(func=cmd_potential)

    sp = sub.add_parser("render")
    sp.add_argument("what", choices=("skeleton", "quotient", "cover"))
    common(sp, field=False)
    sp.add_argument("--file", required=True)
    sp.add_argument("--depth", type=int, default=2)
    sp.set_defaults(func=cmd_render)
    return p


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = args.func(args)
    except PrecisionExhausted as e:
        print(f"precision exhausted: {e}", file=err)
        return EXIT_PRECISION
    except (Inconclusive, SearchFailed) as e:
        print(f"undecided: {e}", file=err)
        return EXIT_UNDECIDED
    except (UsageError, BerkError, ValueError, TypeError, KeyError, ZeroDivisionError,
            ArithmeticError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"input error: {e}", file=err)
        return EXIT_INPUT
    print(text, file=out)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
