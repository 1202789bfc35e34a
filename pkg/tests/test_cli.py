import json
import subprocess
import sys

import pytest

from gdrazin import GenSpec, Matrix, drazin, gen_drazin_matrix, gen_pair, verify_drazin
from gdrazin.acceptance import fixture_dir
from gdrazin.cli import main
from gdrazin.io import matrix_from_obj, save_matrix

FIX = fixture_dir()
EX21 = (str(FIX / "example21_a.json"), str(FIX / "example21_b.json"))
EX22 = (str(FIX / "example22_a.json"), str(FIX / "example22_b.json"))


def run(capsys, *argv):
    code = main([str(x) for x in argv])
    out, err = capsys.readouterr()
    return code, out, err


def _write(tmp_path, name, M):
    path = tmp_path / name
    save_matrix(M, path)
    return path


# -- drazin -----------------------------------------------------------------


def test_drazin_example(capsys):
    code, out, _ = run(capsys, "drazin", EX21[0])
    assert code == 0
    doc = json.loads(out)
    assert matrix_from_obj(doc["ad"]).is_zero()
    assert doc["index"] == 2
    assert matrix_from_obj(doc["api"]) == Matrix.identity(3)


def test_drazin_identity(capsys):
    code, out, _ = run(capsys, "drazin", FIX / "identity3.json")
    assert code == 0
    assert matrix_from_obj(json.loads(out)["ad"]) == Matrix.identity(3)


@pytest.mark.parametrize("seed", range(5))
def test_drazin_random_round_trip(capsys, tmp_path, seed):
    a, _ = gen_drazin_matrix(GenSpec(5, 2, seed, complex_entries=seed % 2 == 1))
    path = _write(tmp_path, "a.json", a)
    code, out, _ = run(capsys, "drazin", path)
    assert code == 0
    assert verify_drazin(a, matrix_from_obj(json.loads(out)["ad"]))
    assert run(capsys, "drazin", path)[1] == out


def test_drazin_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows": 1, "cols": 1, "data": [["x"]]}')
    code, out, err = run(capsys, "drazin", bad)
    assert code == 2 and out == "" and "invalid entry" in err
    rect = _write(tmp_path, "r.json", Matrix.zeros(2, 3))
    assert run(capsys, "drazin", rect)[0] == 2
    assert run(capsys, "drazin", tmp_path / "nope.json")[0] == 2


def test_max_n_cap(capsys, tmp_path, monkeypatch):
    path = _write(tmp_path, "a.json", Matrix.identity(4))
    monkeypatch.setenv("DRAZIN_MAX_N", "3")
    code, _, err = run(capsys, "drazin", path)
    assert code == 2 and "DRAZIN_MAX_N" in err


# -- check ------------------------------------------------------------------


def test_check_examples(capsys):
    code, out, _ = run(capsys, "check", *EX21, "--condition", "LIU")
    assert code == 0 and json.loads(out) == {"LIU": True}
    code, out, _ = run(capsys, "check", *EX21, "--condition", "THM21")
    assert code == 1 and json.loads(out) == {"THM21": False}
    code, out, _ = run(capsys, "check", *EX22, "--condition", "THM21")
    assert code == 0


def test_check_all_with_zero_b(capsys):
    code, out, _ = run(capsys, "check", EX22[0], FIX / "zero3.json", "--all")
    table = json.loads(out)
    assert code == 0 and len(table) == 13 and all(table.values())


def test_check_all_prints_table_on_failure(capsys):
    code, out, _ = run(capsys, "check", *EX21, "--all")
    table = json.loads(out)
    assert code == 1 and table["LIU"] and not table["THM21"]


def test_check_shape_mismatch(capsys, tmp_path):
    b = _write(tmp_path, "b.json", Matrix.zeros(2))
    code, _, err = run(capsys, "check", EX21[0], b, "--all")
    assert code == 2 and "3x3" in err


# -- sum --------------------------------------------------------------------


def test_sum_example_verify(capsys):
    code, out, _ = run(capsys, "sum", *EX22, "--method", "THM21", "--verify")
    doc = json.loads(out)
    assert code == 0 and doc["match"] is True and doc["method"] == "THM21"
    assert matrix_from_obj(doc["result"]).is_zero()


def test_sum_zero_b_thm23(capsys, tmp_path):
    a, _ = gen_drazin_matrix(GenSpec(3, 2, 4))
    pa = _write(tmp_path, "a.json", a)
    code, out, _ = run(capsys, "sum", pa, FIX / "zero3.json", "--method", "THM23", "--verify")
    assert code == 0
    assert matrix_from_obj(json.loads(out)["result"]) == drazin(a).ad


def test_sum_generated_thm22(capsys, tmp_path):
    a, b = gen_pair(GenSpec(5, 2, 3, "THM22"))
    pa, pb = _write(tmp_path, "a.json", a), _write(tmp_path, "b.json", b)
    code, out, _ = run(capsys, "sum", pa, pb, "--method", "THM22", "--verify")
    assert code == 0 and json.loads(out)["match"]
    code, out, _ = run(capsys, "sum", pa, pb, "--method", "THM22")
    assert code == 0 and matrix_from_obj(json.loads(out)) == drazin(a + b).ad


def test_sum_hypothesis_violation(capsys):
    code, out, err = run(capsys, "sum", *EX21, "--method", "THM21")
    assert code == 1 and out == "" and "THM21" in err


def test_sum_liu_is_input_error(capsys):
    assert run(capsys, "sum", *EX21, "--method", "LIU")[0] == 2


def test_sum_mismatch_exit_code(capsys, monkeypatch):
    import gdrazin.cli as cli

    monkeypatch.setattr(cli, "evaluate", lambda a, b, m: Matrix.identity(3))
    code, out, err = run(capsys, "sum", *EX22, "--method", "THM21", "--verify")
    assert code == 3 and json.loads(out)["match"] is False and "disagrees" in err


# -- generate ---------------------------------------------------------------


def test_generate_certificate_and_determinism(capsys, tmp_path):
    args = ["generate", "--family", "THM21", "-n", "6", "-r", "3", "--seed", "42"]
    code, out, _ = run(capsys, *args, "-o", tmp_path / "one")
    cert = json.loads(out)
    assert code == 0 and cert["condition_holds"] is True and cert["family"] == "THM21"
    assert run(capsys, *args, "-o", tmp_path / "two")[0] == 0
    for name in ("a.json", "b.json", "certificate.json"):
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()
    a = matrix_from_obj(json.loads((tmp_path / "one" / "a.json").read_text()))
    b = matrix_from_obj(json.loads((tmp_path / "one" / "b.json").read_text()))
    assert matrix_from_obj(cert["oracle"]) == drazin(a + b).ad


def test_generate_cor22_nilpotent(capsys, tmp_path):
    code, _, _ = run(capsys, "generate", "--family", "COR22", "-n", "4", "-r", "0", "--seed", "1", "-o", tmp_path)
    assert code == 0
    a = matrix_from_obj(json.loads((tmp_path / "a.json").read_text()))
    assert drazin(a).index <= 4 and (a ** 4).is_zero()


def test_generate_bad_spec(capsys, tmp_path):
    code, _, err = run(capsys, "generate", "--family", "COR22", "-n", "4", "-r", "2", "--seed", "1", "-o", tmp_path)
    assert code == 2 and "nilpotent" in err


def test_generate_failure_exit_code(capsys, tmp_path, monkeypatch):
    import gdrazin.generate as gen

    monkeypatch.setattr(gen, "entry_limit", lambda n, eb: 0)
    code, _, err = run(capsys, "generate", "--family", "THM23", "-n", "4", "-r", "2", "--seed", "1", "-o", tmp_path)
    assert code == 1 and "THM23" in err


# -- selftest ---------------------------------------------------------------


def test_selftest_filter_examples(capsys):
    code, out, _ = run(capsys, "selftest", "--filter", "examples")
    lines = out.strip().splitlines()
    assert code == 0
    assert [ln.split()[1] for ln in lines[:-1]] == ["1-golden-a", "2-golden-b"]


def test_selftest_corrupted_fixture(capsys, tmp_path):
    for f in FIX.glob("*.json"):
        (tmp_path / f.name).write_bytes(f.read_bytes())
    (tmp_path / "example21_a.json").write_text('{"rows": 3, "cols": 3, "data": [["0"]]}')
    code, _, err = run(capsys, "selftest", "--filter", "examples", "--fixtures", tmp_path)
    assert code == 2 and "example21_a.json" in err


def test_selftest_failure_names_first_criterion(capsys, tmp_path):
    for f in FIX.glob("*.json"):
        (tmp_path / f.name).write_bytes(f.read_bytes())
    # a valid but wrong matrix makes the golden check fail, not the parser
    save_matrix(Matrix.identity(3), tmp_path / "example21_b.json")
    code, out, err = run(capsys, "selftest", "--filter", "examples", "--fixtures", tmp_path)
    assert code == 3 and "1-golden-a" in err
    assert out.startswith("FAIL")


def test_selftest_unknown_filter(capsys):
    assert run(capsys, "selftest", "--filter", "nothing-like-this")[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "gdrazin", "check", *EX21, "--condition", "THM21"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout) == {"THM21": False}
