import io
import os
import subprocess
import sys
from pathlib import Path

import pytest

from berk import serialize as se
from berk.cli import run

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
BROKEN = str(HERE / "data" / "broken.json")


def _cases():
    cases = {
        "field_hensel": ["field", "--field", "qp7@20", "--hensel", "[1,1,1]", "--seed", "2"],
        "field_val_q": ["field", "--field", "q5", "--element", "50"],
        "field_val_fpt": ["field", "--field", "fp3t", "--element", "(t^2)/(1 + t)"],
        "eval_poly": ["eval", "--field", "q5", "--point", "eta(0, 0)", "--poly", "[1, 5, 1]"],
        "eval_type3": ["eval", "--field", "q5", "--point", "eta(0, sqrt2)"],
        "join": ["join", "--field", "q5", "--x", "5", "--y", "25"],
        "length": ["length", "--field", "q5", "--x", "eta(0, 0)", "--y", "eta(1/5, 1)"],
        "moebius_apply_disc": ["moebius", "apply", "--field", "q5", "--matrix", "[0,1;1,0]", "--disc", "D+(5, 2)"],
        "moebius_apply_point": ["moebius", "apply", "--field", "q5", "--matrix", "[25,0;0,1]", "--point", "eta(0, 1)"],
        "moebius_koebe": ["moebius", "koebe", "--field", "q5", "--matrix", "[25,0;0,1]"],
        "moebius_lox": ["moebius", "lox", "--field", "q7", "--matrix", "[−7,0;−2,7]"],
        "moebius_ford": ["moebius", "ford", "--field", "q5", "--matrix", "[-1249,1248;-624,623]", "--lambda", "1"],
        "potential_slope": ["potential", "slope", "--field", "q5", "--num", "[-1, 1]", "--den", "[0, 1]",
                            "--point", "eta(0, 0)", "--toward", "1"],
        "potential_harmonic": ["potential", "harmonic", "--field", "q5", "--num", "[5, -6, 1]",
                               "--den", "[0, 0, 1]", "--point", "eta(0, 0)"],
        "potential_eval": ["potential", "eval", "--field", "fp3t", "--num", "[1]", "--den", "[0, 1]",
                           "--point", "eta(0, 3)"],
        "verify_broken": ["schottky", "verify", "--file", BROKEN],
    }
    for fx in se.FIXTURES:
        name = fx[:-5]
        f = ["--file", fx]
        cases[f"{name}_verify"] = ["schottky", "verify", *f]
        cases[f"{name}_figure"] = ["schottky", "figure", *f]
        cases[f"{name}_limit"] = ["schottky", "limit", *f, "--depth", "2"]
        cases[f"{name}_skeleton"] = ["schottky", "skeleton", *f]
        cases[f"{name}_quotient"] = ["schottky", "quotient", *f]
        cases[f"{name}_genus"] = ["schottky", "genus", *f]
        cases[f"{name}_express"] = ["schottky", "express", *f, "--word", "g1*g1^-1*g1*g1", "--format", "text"]
        cases[f"{name}_normalizes"] = ["schottky", "normalizes", *f, "--word", "g1"]
        cases[f"{name}_render_skeleton"] = ["render", "skeleton", *f, "--format", "dot"]
        cases[f"{name}_render_quotient"] = ["render", "quotient", *f, "--format", "svg"]
        cases[f"{name}_render_cover"] = ["render", "cover", *f, "--depth", "2"]
    cases["hyperelliptic7_express_c"] = ["schottky", "express", "--file", "hyperelliptic7.json",
                                         "--element", "c", "--format", "text"]
    cases["hyperelliptic7_normalizes_c"] = ["schottky", "normalizes", "--file", "hyperelliptic7.json",
                                            "--element", "c"]
    return cases


CASES = _cases()


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, first, err = invoke(CASES[name])
    assert code == 0, err
    _, second, _ = invoke(CASES[name])
    assert first == second
    path = GOLDEN / f"{name}.out"
    if os.environ.get("BERK_REGEN_GOLDEN"):
        path.write_text(first)
    assert path.read_text() == first


def test_genus_prints_bare_integer():
    assert invoke(["schottky", "genus", "--file", "tate.json"])[:2] == (0, "1\n")


def test_lox_prints_false():
    assert invoke(["moebius", "lox", "--matrix", "[−7,0;−2,7]", "--field", "q7"])[:2] == (0, "false\n")


def test_broken_figure_reports_but_succeeds():
    code, out, _ = invoke(["schottky", "verify", "--file", BROKEN])
    assert code == 0 and '"ok": false' in out and "intersect" in out


def test_quotient_dot_for_tate():
    code, out, _ = invoke(["render", "quotient", "--file", "tate.json", "--format", "dot"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len([l for l in lines if "--" not in l and l.strip().endswith(";")]) == 1
    assert [l for l in lines if "--" in l] == ['  "D+(g1)" -- "D+(g1)" [label="2"];']


def test_cover_svg_label_count():
    _, out, _ = invoke(["render", "cover", "--file", "hyperelliptic7.json", "--depth", "2"])
    assert out.count("<text") == 12


@pytest.mark.parametrize("argv,code", [
    (["moebius", "lox", "--field", "q5", "--matrix", "[1,2;3]"], 2),
    (["moebius", "lox", "--field", "q6", "--matrix", "[1,0;0,1]"], 2),
    (["schottky", "genus", "--file", "no-such-file.json"], 2),
    (["nonsense"], 2),
    (["moebius", "koebe", "--field", "q5", "--matrix", "[1,1;0,1]"], 2),
    (["field", "--field", "qp7@5", "--element", "40353607"], 0),
    (["schottky", "express", "--file", "tate.json", "--word", "g1^3", "--max-len", "1"], 4),
    (["potential", "harmonic", "--field", "qp7@5", "--num", "[16807, 0, 1]", "--den", "[1]",
      "--point", "eta(0, 9)"], 3),
])
def test_exit_codes(argv, code):
    assert invoke(argv)[0] == code


def test_precision_from_environment():
    env = dict(os.environ, BERK_DEFAULT_PRECISION="12")
    r = subprocess.run([sys.executable, "-m", "berk.cli", "field", "--field", "qp7", "--element", "1"],
                       capture_output=True, text=True, env=env)
    assert r.returncode == 0 and '"precision": 12' in r.stdout
