import io
import json
import subprocess
import sys

import pytest

from planepart import closedform as cf
from planepart import cspp as _cspp
from planepart import verify
from planepart.catalog import CLASSES, collect, parse_object
from planepart.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_counts(capsys):
    assert run(capsys, "enumerate", "cspp", "4", "--filter", "rho_tilde", "--count")[1].strip() == "10"
    assert run(capsys, "enumerate", "rdpp", "7", "--count")[1].strip() == "646"
    assert run(capsys, "enumerate", "tspp", "1", "--count")[1].strip() == "1"


@pytest.mark.parametrize("cls", CLASSES)
def test_enumerate_json_revalidates(capsys, cls):
    code, out, _ = run(capsys, "enumerate", cls, "3", "1")
    assert code == 0
    objs = [parse_object(json.loads(ln)) for ln in out.splitlines()]
    assert objs == collect(cls, 3, 1)
    assert len(set(objs)) == len(objs)


def test_enumerate_formats(capsys):
    code, out, _ = run(capsys, "enumerate", "cspp", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "index,object"
    code, out, _ = run(capsys, "enumerate", "gcspp", "3", "--format", "ascii")
    assert code == 0 and "+" in out


def test_jobs_give_identical_output(capsys):
    a = run(capsys, "enumerate", "tspp", "4", "1")[1]
    b = run(capsys, "enumerate", "tspp", "4", "1", "--jobs", "3")[1]
    c = run(capsys, "enumerate", "cspp", "5", "--filter", "rho_tilde", "--jobs", "2")[1]
    d = run(capsys, "enumerate", "cspp", "5", "--filter", "rho_tilde")[1]
    assert a == b and c == d
    assert run(capsys, "enumerate", "dpp", "4", "--count", "--jobs", "2")[1] == run(capsys, "enumerate", "dpp", "4", "--count")[1]


def test_genpoly(capsys):
    assert json.loads(run(capsys, "genpoly", "rdpp", "5", "--k", "1")[1]) == [3, 6, 8, 6, 3]
    assert json.loads(run(capsys, "genpoly", "cdpp", "5")[1]) == [3, 6, 7, 6, 3]
    assert json.loads(run(capsys, "genpoly", "gcspp", "4")[1]) == [2, 3, 3, 2]
    assert run(capsys, "genpoly", "tspp", "3", "--format", "ascii")[1].strip() == "2 + 3t + 2t^2"


def test_map_example(capsys, monkeypatch):
    c = {"kind": "cspp", "n": 8, "m": 0, "rows": [[6, 6, 4, 4, 3, 1, 1], [5, 3, 3, 2, 1], [3, 2, 2, 1], [1, 1]]}
    code, out, _ = run(capsys, "map", "gamma_bij", "--roundtrip", stdin=json.dumps(c), monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["rows"][3] == [6, 5, 5, 4]


@pytest.mark.parametrize("spec,cls,n,m", [
    ("gamma_bij", "cspp", 3, 1), ("tbk:2", "cspp", 3, 1), ("pi:2", "tspp", 3, 1),
    ("rho", "tspp", 4, 0), ("gamma", "cspp", 3, 0), ("phi", "dpp", 3, 1), ("phi", "rdpp", 4, 0),
])
def test_map_roundtrip(capsys, monkeypatch, spec, cls, n, m):
    lines = "\n".join(json.dumps(x.to_json()) for x in collect(cls, n, m))
    code, out, err = run(capsys, "map", spec, "--roundtrip", stdin=lines, monkeypatch=monkeypatch)
    assert code == 0, err
    for ln in out.splitlines():
        parse_object(json.loads(ln))


def test_map_theta_delta(capsys, monkeypatch):
    inv = _cspp.invariants_of(5, 0, "rho_tilde")
    code, _, _ = run(capsys, "map", "theta", "--roundtrip", stdin="\n".join(json.dumps(c.to_json()) for c in inv), monkeypatch=monkeypatch)
    assert code == 0
    inv = _cspp.invariants_of(5, 0, "gamma_tilde")
    code, _, _ = run(capsys, "map", "delta", "--roundtrip", stdin="\n".join(json.dumps(c.to_json()) for c in inv), monkeypatch=monkeypatch)
    assert code == 0


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "enumerate", "tspp", "3", "--filter", "rho_tilde")[0] == 2
    assert run(capsys, "enumerate", "tspp", "9")[0] == 1
    assert run(capsys, "enumerate", "tspp", "3", "--limit", "10")[0] == 2
    assert run(capsys, "enumerate", "nosuch", "3")[0] == 2
    assert run(capsys, "genpoly", "tspp", "3", "--k", "9")[0] == 2
    assert run(capsys, "map", "nosuch", stdin="{}", monkeypatch=monkeypatch)[0] == 2
    assert run(capsys, "map", "rho", stdin="not json", monkeypatch=monkeypatch)[0] == 1
    bad = json.dumps({"kind": "cspp", "n": 2, "m": 0, "rows": [[3]]})
    assert run(capsys, "map", "gamma_bij", stdin=bad, monkeypatch=monkeypatch)[0] == 1


def test_limit_warning(capsys):
    code, _, err = run(capsys, "enumerate", "tspp", "3", "--limit", "8")
    assert code == 0 and "warning" in err


def test_det(capsys):
    code, out, _ = run(capsys, "det", "R_o", "3")
    assert code == 0 and out.strip().endswith("det = 3 + 6t + 8t^2 + 6t^3 + 3t^4")
    code, out, _ = run(capsys, "det", "Cprime", "5", "0", "--format", "json")
    assert json.loads(out)["det"] == [3, 6, 7, 6, 3]
    code, out, _ = run(capsys, "det", "andrews-burge", "3", "1", "2", "--format", "json")
    assert code == 0 and json.loads(out)["equal"]
    assert run(capsys, "det", "mrr", "4", "2")[0] == 0
    assert run(capsys, "det", "R_o")[0] == 2


def test_refvalues(capsys):
    code, out, _ = run(capsys, "refvalues", "--limit", "7", "--format", "json")
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert code == 0 and [r["A_HTS"] for r in rows] == [1, 2, 3, 10, 25, 140, 588]
    assert run(capsys, "refvalues", "--format", "csv")[0] == 0


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "all", "--limit", "4", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["summary"]["fail"] == 0


def test_fault_injection_tbk(capsys, monkeypatch):
    real = _cspp.tbk

    def broken(c, r):
        return real(c, r) if r != 2 else c

    monkeypatch.setattr(_cspp, "tbk", broken)
    code, out, _ = run(capsys, "verify", "bijections", "--limit", "3")
    assert code == 1 and "fail" in out


def test_fault_injection_determinant(capsys, monkeypatch):
    monkeypatch.setattr(cf, "matrix_Rprime", cf.matrix_Cprime)
    code, _, _ = run(capsys, "verify", "all", "--limit", "3")
    assert code == 1


def test_conjecture_reports(capsys):
    for which in verify.CONJECTURES:
        code, out, _ = run(capsys, "conjecture", which, "--limit", "5", "--format", "json")
        rep = json.loads(out)
        assert code == 0
        assert {c["status"] for c in rep["checks"]} == {"reported"}


def test_report_table():
    rep = verify.VerificationReport("x")
    rep.add("a", "true thing", True)
    rep.add("b", "open thing", False, reported=True)
    assert rep.ok
    rep.add("c", "false thing", False)
    assert not rep.ok and [c.id for c in rep.failures()] == ["c"]
    assert "1 pass, 1 fail, 1 reported" in rep.to_table()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "planepart", "enumerate", "cdpp", "4", "--count"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "10"
    res = subprocess.run([sys.executable, "-m", "planepart", "bogus"], capture_output=True, text=True)
    assert res.returncode == 2
