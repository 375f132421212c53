import json
import subprocess
import sys
from fractions import Fraction
from io import StringIO

import pytest

from qjacobi.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from qjacobi.ring import G, MeroQJac, QJacPoly, evaluate, parse_poly
from qjacobi.series import FourierSeries
from qjacobi.suites import Config


def run(*argv):
    out = StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_gen_g2():
    code, text = run("gen", "--name", "G2", "--qorder", "4")
    assert code == EXIT_OK
    assert [line.split(": ")[1] for line in text.splitlines()] == ["-1/24", "1", "3", "4", "7"]


def test_gen_json_round_trip():
    code, text = run("gen", "--name", "Theta", "--qorder", "3", "--json")
    assert code == EXIT_OK
    series = FourierSeries.from_json(json.loads(text))
    assert json.dumps(series.to_json(), sort_keys=True, indent=2) + "\n" == text


def test_gen_bad_name():
    assert run("gen", "--name", "G3")[0] == EXIT_USAGE
    assert run("gen", "--name", "Nope")[0] == EXIT_USAGE


def test_usage_errors():
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("gen", "--name", "G2", "--qorder", "0")[0] == EXIT_USAGE
    assert run("residue", "--family", "C", "--k", "1")[0] == EXIT_USAGE
    assert run("derive", "--name", "D_x", "G2")[0] == EXIT_USAGE
    assert run("derive", "--name", "D_p", "G2 +")[0] == EXIT_USAGE


def test_derive():
    assert run("derive", "--name", "D_p", "Theta") == (EXIT_OK, "Θ*A\n")
    code, text = run("derive", "--name", "D_tau", "G2", "--json")
    assert MeroQJac.from_json(json.loads(text)) == MeroQJac(G["G2"] ** 2 * -2 + G["G4"] * Fraction(5, 6))
    code, text = run("derive", "--name", "dG2", "-G2 + A^2/2", "--json")
    assert MeroQJac.from_json(json.loads(text)) == MeroQJac(QJacPoly.const(-1))


def test_derive_from_file(tmp_path):
    f = tmp_path / "poly.json"
    f.write_text(json.dumps(MeroQJac(G["A"] ** 3, 2, 1).to_json()))
    code, text = run("derive", "--name", "dA", "--input", str(f), "--json")
    assert code == EXIT_OK
    assert MeroQJac.from_json(json.loads(text)) == MeroQJac(G["A"] ** 2 * 3, 2, 1)


def test_fit(tmp_path):
    f = tmp_path / "series.json"
    target = evaluate(G["P"] + G["G2"] * 2, 14)
    f.write_text(json.dumps({"series": target.to_json(), "weight": 2, "index": 0}))
    code, text = run("fit", "--input", str(f), "--json")
    assert code == EXIT_OK
    obj = json.loads(text)
    assert obj["ok"] and MeroQJac.from_json(obj["result"]) == MeroQJac(G["P"] + G["G2"] * 2)


def test_fit_failure(tmp_path):
    f = tmp_path / "series.json"
    f.write_text(json.dumps({"series": evaluate(G["G2"], 14).to_json(), "weight": 4, "index": 0}))
    assert run("fit", "--input", str(f))[0] == EXIT_FAIL
    assert run("fit", "--input", str(tmp_path / "missing.json"))[0] == EXIT_USAGE


def test_solve_a():
    code, text = run("solve", "--family", "A", "--max-k", "5")
    assert code == EXIT_OK
    lines = dict(line.split(" = ") for line in text.splitlines())
    assert list(lines) == [f"A{k}" for k in range(6)]
    assert parse_poly(lines["A4"].replace("℘'", "Pp").replace("℘", "P")) == \
        parse_poly("A^4/24 - A^2*G2/2 + G2^2/3 - G4/72")


def test_solve_c_json():
    code, text = run("solve", "--family", "C", "--k", "1", "--l", "1", "--json")
    obj = json.loads(text)
    assert QJacPoly.from_json(obj["C1,1"]) == G["G2"] ** 2 * -2 + G["G4"] * Fraction(5, 6)


def test_residue():
    code, text = run("residue", "--family", "C", "--k", "1", "--l", "1", "--zorder", "2", "--qorder", "2")
    assert code == EXIT_OK
    assert text.splitlines()[0] == "z^0: 0, 1, 6"


def test_verify_ring():
    code, text = run("verify", "--suite", "ring")
    assert code == EXIT_OK
    assert text.splitlines()[-1] == "64/64 checks passed"
    names = [line.split("] ", 1)[1] for line in text.splitlines()[:-1]]
    assert names == sorted(names)


def test_verify_json_deterministic():
    a = run("verify", "--suite", "normalization", "--json")[1]
    b = run("verify", "--suite", "normalization", "--json")[1]
    assert a == b and json.loads(a)["ok"]


def test_verify_failure_exit(monkeypatch):
    from qjacobi import suites
    from qjacobi.suites import Check

    monkeypatch.setitem(suites.SUITES, "ring", lambda cfg: [Check("broken", False, "forced")])
    code, text = run("verify", "--suite", "ring")
    assert code == EXIT_FAIL
    assert "FAIL [ring] broken: forced" in text


def test_config_validation():
    with pytest.raises(ValueError):
        Config(qorder=0)
    with pytest.raises(ValueError):
        Config(fmt="xml")
    assert Config().qorder == 12 and Config().margin == 10


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qjacobi", "gen", "--name", "G4", "--qorder", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "q^0: 1/240"
