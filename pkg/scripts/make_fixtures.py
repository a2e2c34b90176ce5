"""Regenerate the group files shipped in src/berk/fixtures."""

from pathlib import Path

from berk.field import FieldSpec
from berk.moebius import Moebius, inverse
from berk.poly import Poly, hensel_root
from berk.serialize import Group, dumps, group_to_json
from berk.berkline import GDisc, closed_disc
from berk.schottky import Figure

OUT = Path(__file__).resolve().parent.parent / "src" / "berk" / "fixtures"


def tate():
    Q = FieldSpec("exact_q", 5)
    g = Moebius(25, 0, 0, 1, Q)
    fig = Figure([closed_disc(Q(0), 1)], [GDisc(Q(0), -1, True, True)])
    return group_to_json(Group(Q, [g], fig))


def hyperelliptic():
    K = FieldSpec("capped_padic", 7, 60)
    rho = hensel_root(Poly(K, [1, 1, 1]), K(2))
    pi = K(7)
    a = Moebius(-pi, 0, -2, pi, K)
    b = Moebius(1 + pi - rho, (1 + pi) * (rho - 1), 1 - rho, (1 + pi) * rho - 1, K)
    c = Moebius(1 + pi, -pi * (1 + pi), 2, -(1 + pi), K)
    g1 = a @ b @ a @ b @ b
    g2 = a @ b @ b @ a @ b
    return group_to_json(Group(K, [g1, g2], extras={"a": a, "b": b, "c": c}))


def genus3():
    return {
        "field": FieldSpec("exact_q", 5).to_json(),
        "generators": [
            {"koebe": {"alpha": "0", "alphaPrime": "infinity", "beta": "125"}},
            {"koebe": {"alpha": "1", "alphaPrime": "2", "beta": "625"}},
            {"koebe": {"alpha": "5", "alphaPrime": "3", "beta": "125"}},
        ],
    }


def asm():
    R = FieldSpec("ratfunc_fp", 3)
    v = R.uniformizer()
    gens = []
    for u in (1, 2):
        for u2 in (1, 2):
            a = Moebius(1, u, 0, 1, R)
            b = Moebius(v, 0, u2, v, R)
            gens.append(inverse(a) @ inverse(b) @ a @ b)
    return group_to_json(Group(R, gens))


def broken():
    obj = tate()
    obj["figure"][0]["plus"]["logradius"] = -1
    return obj


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for name, fn in (("tate.json", tate), ("hyperelliptic7.json", hyperelliptic),
                     ("genus3_p5.json", genus3), ("asm_fpt.json", asm)):
        (OUT / name).write_text(dumps(fn()) + "\n")
    data = Path(__file__).resolve().parent.parent / "tests" / "data"
    data.mkdir(exist_ok=True)
    (data / "broken.json").write_text(dumps(broken()) + "\n")
