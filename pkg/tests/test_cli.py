import json
import math
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from dhermite.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,code", [
    (["eval", "--n", "0", "--x", "3", "--y", "7", "--lambda", "1"], 0),
    (["eval", "--n", "2", "--x", "1", "--y", "1", "--lambda", "-2"], 2),
    (["eval", "--n", "2", "--x", "1", "--y", "1", "--lambda", "-1"], 2),
    (["eval", "--n", "-1", "--x", "1", "--y", "1", "--lambda", "1"], 2),
    (["eval", "--n", "2", "--x", "1", "--y", "1"], 2),
    (["eval", "--n", "2", "--x", "1", "--y", "1", "--lambda", "1", "--bogus", "3"], 2),
    (["coeffs", "--n", "-3"], 2),
    (["coeffs", "--n", "3"], 0),
    (["frobnicate"], 2),
    ([], 2),
    (["verify", "--check", "no_such"], 2),
    (["verify", "--check", "rodrigues", "--variant", "both"], 0),
    (["verify", "--check", "rodrigues", "--variant", "paper"], 0),
    (["verify", "--variant", "sideways"], 2),
    (["ortho", "--n", "0", "--m", "0", "--lambda", "1", "--y", "1"], 2),
    (["gf-even", "--t", "1", "--x", "1", "--y", "1", "--lambda", "1"], 2),
    (["nodhf", "--mu", "0", "--x", "1", "--y", "1", "--lambda", "1"], 2),
    (["nodhf", "--mu", "1", "--x", "2", "--y", "0", "--lambda", "1"], 0),
    (["heat", "--n", "2", "--lambda", "1", "--dx", "0.1", "--dy", "0.1"], 2),
    (["heat", "--n", "4", "--lambda", "1"], 0),
    (["heat", "--n", "4", "--lambda", "1", "--tolerance", "1e-9"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_eval_examples(capsys):
    assert run(capsys, "eval", "--n", "0", "--x", "3", "--y", "7", "--lambda", "1")[1].strip() == "1"
    code, out, _ = run(capsys, "eval", "--n", "2", "--x", "1", "--y", "1", "--lambda", "1")
    assert out.strip() == "1.86674737503809"
    code, _, err = run(capsys, "eval", "--n", "2", "--x", "1", "--y", "1", "--lambda", "-2")
    assert code == 2 and "lam" in err.lower()


def test_eval_json(capsys):
    _, out, _ = run(capsys, "eval", "--n", "3", "--x", "1", "--y", "1", "--lambda", "1",
                    "--format", "json")
    rec = json.loads(out)
    assert set(rec) == {"n", "x", "y", "lambda", "value"}
    assert rec["value"] == pytest.approx(3.215742735498138, rel=1e-15)


def test_coeffs_csv(capsys):
    lines = run(capsys, "coeffs", "--n", "1")[1].splitlines()
    assert lines == ["ex,ey,eL,num,den", "1,0,1,1,1"]
    lines = run(capsys, "coeffs", "--n", "2")[1].splitlines()
    assert lines[0] == "ex,ey,eL,num,den"
    assert sorted(lines[1:]) == ["0,1,1,2,1", "2,0,2,1,1"]
    assert run(capsys, "coeffs", "--n", "0")[1].splitlines()[1:] == ["0,0,0,1,1"]


def test_coeffs_round_trip(capsys):
    rng = random.Random(7)
    for n in range(11):
        recs = json.loads(run(capsys, "coeffs", "--n", str(n), "--format", "json")[1])
        for _ in range(5):
            x, y = rng.uniform(-3, 3), rng.uniform(-3, 3)
            lam = rng.choice([-0.5, 0.5, 1.0, 2.0])
            L = math.log1p(lam) / lam
            val = math.fsum(float(Fraction(int(r["num"]), int(r["den"]))) * x ** r["ex"] * y ** r["ey"]
                            * L ** r["eL"] for r in recs)
            out = run(capsys, "eval", "--n", str(n), "--x", repr(x), "--y", repr(y),
                      "--lambda", repr(lam), "--format", "json")[1]
            ref = json.loads(out)["value"]
            assert abs(val - ref) <= 1e-12 * max(1.0, abs(ref))


def test_verify_table_and_json(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "--check", "rodrigues", "--variant", "both",
                       "--json", str(path))
    assert code == 0
    rows = [l.split() for l in out.splitlines()[1:]]
    assert [r[:3] for r in rows] == [["rodrigues", "corrected", "PASS"],
                                     ["rodrigues", "paper", "FAIL"]]
    data = json.loads(path.read_text())
    assert [d["status"] for d in data] == ["PASS", "FAIL"]
    code, out, _ = run(capsys, "verify", "--check", "ode", "--format", "json")
    assert json.loads(out)[0]["v"] == 1


def test_ortho(capsys):
    out = run(capsys, "ortho", "--n", "0", "--m", "0", "--lambda", "1")[1]
    assert float(out) == pytest.approx(2.128934038862452, rel=1e-10)
    out = run(capsys, "ortho", "--n", "0", "--m", "0", "--lambda", "1", "--y", "-1",
              "--format", "json")[1]
    rec = json.loads(out)
    assert rec["value"] == pytest.approx(rec["closed_form"], rel=1e-10)
    assert {"value", "error", "closed_form", "variant"} <= set(rec)


def test_gf_even(capsys):
    assert float(run(capsys, "gf-even", "--t", "0", "--x", "1", "--y", "1", "--lambda", "1")[1]) == 1
    rec = json.loads(run(capsys, "gf-even", "--t", "0.05", "--x", "1", "--y", "1",
                         "--lambda", "1", "--format", "json")[1])
    assert abs(rec["closed"] - rec["series"]) < 1e-8


def test_nodhf(capsys):
    out = run(capsys, "nodhf", "--mu", "1", "--x", "2", "--y", "0", "--lambda", "1")[1]
    assert float(out) == pytest.approx(1 / (2 * math.log(2)), rel=1e-10)


def test_heat_json(capsys):
    rec = json.loads(run(capsys, "heat", "--n", "4", "--lambda", "1", "--format", "json")[1])
    assert rec["status"] == "PASS" and rec["residual"] < 1e-3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dhermite", "eval", "--n", "1", "--x", "1",
                           "--y", "0", "--lambda", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
