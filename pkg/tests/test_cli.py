import json
import subprocess
import sys
from pathlib import Path

import pytest

from apnkit.algebra import onedim_apn
from apnkit.cli import Document, DocumentError, dumps, load, main, save
from apnkit.exactlin import Field, FieldError
from apnkit.fixtures import a3, n2, worked_example
from apnkit.matched_pair import split_apn

FIX = Path(__file__).resolve().parent.parent / "fixtures"
Q = Field.rational()


def run(*args):
    return main([str(a) for a in args])


@pytest.mark.parametrize("args,code", [
    (("verify", "apn", FIX / "a3.json"), 0),
    (("ybe", "check", FIX / "double.json", "--s", "canonical"), 0),
    (("verify", "apn", FIX / "onedim_p1_q1.json"), 1),
    (("verify", "apn", FIX / "onedim_p2_qm1.json"), 0),
    (("verify", "novikov", FIX / "n2.json"), 0),
    (("verify", "anti-o", FIX / "n2.json", "--param", "a=2"), 0),
    (("verify", "o-operator", FIX / "a2.json"), 0),
    (("verify", "bialgebra", FIX / "worked.json"), 0),
    (("verify", "factorizable", FIX / "double_a3.json", "--s", "canonical"), 0),
    (("verify", "matched-pair", FIX / "matched_pair.json"), 0),
    (("verify", "rb", FIX / "rb_quadratic.json"), 0),
    (("search", "apn", "--field", "gf:5", "--dim", "1"), 0),
    (("build", "compatible-apn", FIX / "n2.json"), 2),
    (("verify", "apn", FIX / "missing.json"), 2),
])
def test_exit_codes(args, code, capsys):
    assert run(*args) == code


def test_unknown_subcommand(capsys):
    assert run("frobnicate") == 2
    assert run("verify", "nonsense", FIX / "a3.json") == 2


def test_witness_text(capsys):
    run("verify", "apn", FIX / "onedim_p1_q1.json")
    out = capsys.readouterr().out
    assert out.startswith("FAIL verify apn")
    assert "Aa3 at (0,0,0): [3]" in out


def test_json_report_stable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("verify", "apn", FIX / "onedim_p1_q1.json", "--json-out", a)
    run("verify", "apn", FIX / "onedim_p1_q1.json", "--json-out", b)
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["passed"] is False
    assert {w["identity"] for w in rep["witnesses"]} == {"Aa2", "Aa3"}


def test_load_n2():
    doc = load(FIX / "n2.json")
    N = doc.novikov()
    assert N == n2(Q)
    assert (N.op != 0).sum() == 2


def test_empty_ops_is_zero(tmp_path):
    p = tmp_path / "z.json"
    p.write_text(json.dumps({"field": {"kind": "gf", "p": 5}, "dim": 2, "ops": {}}))
    A = load(p).apn()
    assert A.field.is_zero(A.succ) and A.field.is_zero(A.prec)


def test_rational_literal_in_gf(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(json.dumps({"field": {"kind": "gf", "p": 5}, "dim": 1,
                             "ops": {"succ": [[0, 0, 0, "1/3"]]}}))
    with pytest.raises((DocumentError, FieldError)):
        load(p).apn()
    assert load(p, coerce=True).apn().succ[0, 0, 0] == 2
    assert run("verify", "apn", p) == 2


def test_parse_error_diagnostics(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 2,\n "ops": {"succ": [[0, 0]}\n')
    with pytest.raises(DocumentError) as err:
        load(p).apn()
    assert "line" in str(err.value)
    q = tmp_path / "bad2.json"
    q.write_text(json.dumps({"field": {"kind": "rational"}, "dim": 2,
                             "ops": {"succ": [[0, 5, 0, "1"]]}}))
    with pytest.raises(DocumentError) as err:
        load(q).apn()
    assert "succ" in str(err.value)


@pytest.mark.parametrize("obj", [a3(Q), onedim_apn(Field.gf(5), 3, 1), n2(Q),
                                 split_apn(worked_example(Q)[0], 2)])
def test_round_trip(obj, tmp_path):
    p = tmp_path / "x.json"
    p.write_text(dumps(save(obj)))
    doc = load(p)
    back = {"APNAlgebra": doc.apn, "NovikovAlgebra": doc.novikov,
            "APNMatchedPair": doc.matched_pair}[type(obj).__name__]()
    if type(obj).__name__ == "APNMatchedPair":
        assert back.A1 == obj.A1 and back.A2 == obj.A2
        assert back.rep1 == obj.rep1 and back.rep2 == obj.rep2
    else:
        assert back == obj


def test_document_params():
    doc = Document({"field": {"kind": "rational"}, "dim": 1, "params": {"a": "2"},
                    "ops": {"succ": [[0, 0, 0, "-2*a"]], "prec": [[0, 0, 0, "a"]]}})
    A = doc.apn()
    assert A.succ[0, 0, 0] == -4 and A.prec[0, 0, 0] == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "apnkit", "verify", "apn", str(FIX / "a3.json")],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("PASS verify apn")
