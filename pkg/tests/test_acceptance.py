"""Acceptance criteria 1-10, one PASS/FAIL line each (visible with ``-s``)."""

import json

import pytest

from gdrazin import Matrix, drazin
from gdrazin.acceptance import CRITERIA, fixture_dir, run
from gdrazin.cli import main
from gdrazin.io import matrix_from_obj


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.key for c in CRITERIA])
def test_criterion(criterion):
    res = run(criterion)
    print("\n" + res.line())
    assert res.passed, res.detail


def _cli_contract(tmp_path, capsys):
    """Round-trip, per-command exit codes, determinism, aggregated selftest."""
    fix = fixture_dir()
    ex21 = [str(fix / "example21_a.json"), str(fix / "example21_b.json")]
    ex22 = [str(fix / "example22_a.json"), str(fix / "example22_b.json")]
    failures = []

    def call(*argv):
        code = main([str(x) for x in argv])
        out, err = capsys.readouterr()
        return code, out

    def expect(label, got, want):
        if got != want:
            failures.append(f"{label}: got {got}, want {want}")

    code, out = call("drazin", ex21[0])
    expect("drazin exit", code, 0)
    doc = json.loads(out)
    expect("drazin index", doc["index"], 2)
    expect("drazin round-trip", call("drazin", ex21[0])[1], out)
    bad = tmp_path / "bad.json"
    bad.write_text("[]")
    expect("drazin parse error", call("drazin", bad)[0], 2)

    expect("check LIU", call("check", *ex21, "--condition", "LIU")[0], 0)
    expect("check THM21", call("check", *ex21, "--condition", "THM21")[0], 1)
    expect("check zero b", call("check", ex22[0], fix / "zero3.json", "--all")[0], 0)

    code, out = call("sum", *ex22, "--method", "THM21", "--verify")
    expect("sum exit", code, 0)
    expect("sum result", matrix_from_obj(json.loads(out)["result"]), Matrix.zeros(3))
    expect("sum violation", call("sum", *ex21, "--method", "THM21")[0], 1)

    gen = ["generate", "--family", "THM21", "-n", "6", "-r", "3", "--seed", "42", "-o"]
    code, cert = call(*gen, tmp_path / "g1")
    expect("generate exit", code, 0)
    expect("generate certified", json.loads(cert)["condition_holds"], True)
    call(*gen, tmp_path / "g2")
    for name in ("a.json", "b.json", "certificate.json"):
        expect(f"generate {name} identical", (tmp_path / "g1" / name).read_bytes(), (tmp_path / "g2" / name).read_bytes())
    a = matrix_from_obj(json.loads((tmp_path / "g1" / "a.json").read_text()))
    b = matrix_from_obj(json.loads((tmp_path / "g1" / "b.json").read_text()))
    expect("generate oracle", matrix_from_obj(json.loads(cert)["oracle"]), drazin(a + b).ad)

    code, out = call("selftest")
    expect("selftest exit", code, 0)
    expect("selftest lines", sum(ln.startswith("PASS") for ln in out.splitlines()), 9)
    return failures


def test_criterion_10_cli_contract(tmp_path, capsys):
    failures = _cli_contract(tmp_path, capsys)
    with capsys.disabled():
        tag = "FAIL" if failures else "PASS"
        print(f"\n{tag}  {'10-cli':<12} CLI contract and aggregated selftest: {'; '.join(failures) or 'ok'}")
    assert not failures
