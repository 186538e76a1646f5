import json
import subprocess
import sys
from fractions import Fraction as R

import mpmath
import pytest

from shodge import serialize as ser
from shodge.algebraicity import minimal_polynomial
from shodge.algebraicity.verify import inverse_combinations, reflect_combinations
from shodge.cli import main
from shodge.fermat import DegreeProfile
from shodge.forms import FormTerm, classify_good_form
from shodge.hodge_space import dim_strong_hodge, nullspace_oracle
from shodge.hyper import BigComplex


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_dim_text(capsys):
    assert run(capsys, "dim", "--degrees", "2,6", "--pert-degree", "3") == (0, "10\n", "")


def test_dim_oracle_flag(capsys):
    rc, out, _ = run(capsys, "dim", "--degrees", "2,9", "--oracle", "--json")
    data = json.loads(out)
    assert rc == 0 and data["dimension"] == 4 and data["method"] == "ExactNullspace"


def test_hodge_numbers(capsys):
    rc, out, _ = run(capsys, "hodge-numbers", "--degrees", "2,7", "--pert-degree", "3")
    assert rc == 0 and out.strip() == "h20: 1, h11: 10, h02: 1"
    rc, out, _ = run(capsys, "hodge-numbers", "--degrees", "2,7", "--json")
    data = json.loads(out)
    assert data["levels"] == [{"level": 1, "count": 1}, {"level": 2, "count": 10}, {"level": 3, "count": 1}]


def test_gens_json(capsys):
    rc, out, _ = run(capsys, "gens", "--degrees", "2,9", "--json")
    data = json.loads(out)
    assert rc == 0 and data["dimension"] == 4
    assert data["slice_basis"][0] == ["1", "0", "0", "1", "0", "0", "1", "0"]
    assert {"alpha": [0, 3], "k": 1, "coeff": "1"} in data["generators"][2]


def test_classify(capsys):
    rc, out, _ = run(capsys, "classify", "--degrees", "2,6", "--pert", "cubic", "--beta", "0,4,0", "--order", "2", "--json")
    data = json.loads(out)
    assert rc == 0 and data["verdict"] == "Good" and "trace" in data
    rc, out, _ = run(capsys, "classify", "--degrees", "2,6", "--beta", "0,4,0", "--order", "1")
    assert out.strip() == "NotGood"


def test_classify_explicit_polynomial(capsys):
    rc, out, _ = run(capsys, "classify", "--degrees", "2,9", "--pert", "0,1,0,1", "--beta", "0,2,0", "--order", "1")
    assert rc == 0 and out.strip() in ("Good", "NotGood")
    rc, _, err = run(capsys, "classify", "--degrees", "2,9", "--pert", "1,1", "--beta", "0,2,0")
    assert rc == 1 and "degree" in err


def test_period_and_rewrite_roundtrip(capsys, tmp_path):
    rc, out, _ = run(capsys, "period", "--degrees", "2,6", "--beta", "0,4,0", "--cycle", "1", "--json")
    assert rc == 0
    expr = ser.expression_from(json.loads(out))
    assert len(expr.terms) == 1
    path = tmp_path / "g2.json"
    path.write_text(ser.dumps(ser.expression_to(reflect_combinations()["G2"])))
    rc, out, _ = run(capsys, "rewrite", "--expr", str(path))
    assert rc == 0 and out.strip() == "(lambda)^(1/3)*[2/3]"


def test_period_evaluation(capsys):
    rc, out, _ = run(capsys, "period", "--degrees", "2,6", "--beta", "0,4,0", "--eval-lambda", "3", "--prec", "30", "--json")
    data = json.loads(out)
    assert rc == 0 and data["lambda"] == "3" and "re" in data["value"]


def test_eval(capsys):
    rc, out, _ = run(capsys, "eval", "--f", "1,1,2", "--z", "1/2", "--prec", "40", "--json")
    v = json.loads(out)["value"]
    with mpmath.workdps(50):
        assert abs(mpmath.mpf(v["re"]) - 2 * mpmath.log(2)) < mpmath.mpf(10) ** -38
    rc, out, _ = run(capsys, "eval", "--f", "2/3,1/3,4/3", "--z", "1-lambda", "--lambda", "2")
    assert rc == 0
    rc, _, err = run(capsys, "eval", "--f", "2/3,1/3,4/3", "--z", "1-lambda")
    assert rc == 1


def test_minpoly_command(capsys, tmp_path):
    path = tmp_path / "g1.json"
    path.write_text(ser.dumps(ser.expression_to(reflect_combinations()["G1"])))
    rc, out, _ = run(capsys, "minpoly", "--value-expr", str(path), "--lambda", "2", "--prec", "150", "--max-degree", "4", "--json")
    data = json.loads(out)
    assert rc == 0 and data["polynomial"] == ["-32000", "0", "0", "27"]
    lone = tmp_path / "lone.json"
    lone.write_text(ser.dumps(ser.expression_to(type(reflect_combinations()["G1"])(reflect_combinations()["G1"].terms[:1]))))
    rc, out, _ = run(capsys, "minpoly", "--value-expr", str(lone), "--lambda", "3", "--prec", "100", "--max-degree", "4")
    assert rc == 3 and "no relation detected" in out
    rc, _, _ = run(capsys, "minpoly", "--value-expr", str(lone), "--lambda", "3", "--prec", "100", "--max-degree", "4",
                   "--allow-missing")
    assert rc == 0


def test_verify_command(capsys):
    rc, out, _ = run(capsys, "verify", "--prop", "inverse-combinations", "--lambda", "3", "--prec", "80", "--require")
    assert rc == 0 and out.strip().endswith("all checks passed")
    rc, _, err = run(capsys, "verify", "--prop", "nonsense", "--lambda", "3")
    assert rc == 2


def test_selftest_is_deterministic(capsys):
    a = run(capsys, "selftest", "--seed", "4", "--json")
    b = run(capsys, "selftest", "--seed", "4", "--json")
    assert a == b and a[0] == 0 and json.loads(a[1])["all_pass"]


def test_identical_config_identical_output(capsys):
    argv = ("period", "--degrees", "2,6", "--beta", "0,1,0", "--eval-lambda", "5/2", "--prec", "40", "--json")
    assert run(capsys, *argv) == run(capsys, *argv)


def test_exit_codes(capsys):
    assert run(capsys, "dim")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "dim", "--degrees", "2,6,3")[0] == 2
    assert run(capsys, "period", "--degrees", "2,6", "--beta", "0,2,0")[0] == 2
    assert run(capsys, "dim", "--degrees", "2,6", "--prec", "5")[0] == 1
    assert run(capsys, "rewrite", "--expr", "/nonexistent/file.json")[0] == 1


def test_config_file_and_env(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\ndegrees = 2,9\npert-degree: 3\njson = true\n")
    rc, out, _ = run(capsys, "dim", "--config", str(cfg))
    assert rc == 0 and json.loads(out)["dimension"] == 4
    rc, out, _ = run(capsys, "dim", "--config", str(cfg), "--degrees", "2,6")
    assert json.loads(out)["dimension"] == 10
    monkeypatch.setenv("SHODGE_PRECISION", "25")
    rc, out, _ = run(capsys, "eval", "--f", "1,1,2", "--z", "1/2", "--json")
    assert len(json.loads(out)["value"]["re"].replace(".", "").lstrip("0")) <= 26
    monkeypatch.setenv("SHODGE_PRECISION", "many")
    assert run(capsys, "dim", "--degrees", "2,6")[0] == 1


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "shodge.cli", "dim", "--degrees", "2,6"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "10"


def _same_json(to, frm, obj):
    text = ser.dumps(to(obj))
    assert ser.dumps(to(frm(json.loads(text)))) == text


def test_json_roundtrips():
    for e in list(reflect_combinations().values()) + list(inverse_combinations().values()):
        _same_json(ser.expression_to, ser.expression_from, e)
    for prof in (DegreeProfile((2, 9), 3), DegreeProfile((3, 4), 3)):
        _same_json(ser.profile_to, ser.profile_from, prof)
        _same_json(ser.hodge_space_to, ser.hodge_space_from, dim_strong_hodge(prof))
        _same_json(ser.hodge_space_to, ser.hodge_space_from, nullspace_oracle(prof))
    res = classify_good_form(FormTerm((0, 4, 0), 1), DegreeProfile((2, 6), 3))
    _same_json(ser.good_form_to, ser.good_form_from, res)
    with mpmath.workdps(60):
        v = BigComplex(mpmath.mpc(mpmath.sqrt(2), -mpmath.pi), mpmath.mpf(10) ** -50)
        mp = minimal_polynomial(BigComplex(mpmath.sqrt(2), mpmath.mpf(10) ** -55), 4, 50)
    _same_json(lambda x: ser.bigcomplex_to(x, 50), lambda d: ser.bigcomplex_from(d, 50), v)
    _same_json(ser.minpoly_to, ser.minpoly_from, mp)
    assert ser.minpoly_from(ser.minpoly_to(mp)).polynomial == mp.polynomial


def test_exact_roundtrip_values():
    r = R(-7, 12)
    assert ser.unq(ser.q(r)) == r
    e = reflect_combinations()["G3"]
    back = ser.expression_from(json.loads(ser.dumps(ser.expression_to(e))))
    assert [(t.cyclo, t.powers, t.ratfun, t.beta, t.hyper) for t in back.terms] == [
        (t.cyclo, t.powers, t.ratfun, t.beta, t.hyper) for t in e.terms
    ]


@pytest.mark.parametrize("cmd", ["dim", "gens", "hodge-numbers", "classify", "period", "eval", "rewrite", "minpoly",
                                 "verify", "selftest"])
def test_help_for_every_command(capsys, cmd):
    with pytest.raises(SystemExit) as exc:
        main([cmd, "--help"])
    assert exc.value.code == 0
    assert "usage" in capsys.readouterr().out
