from apnkit.exactlin import Field
from apnkit.report import IdentityReport

F = Field.gf(5)


def test_add_records_witnesses():
    r = IdentityReport(F)
    res = F.zeros((2, 2, 3))
    res[1, 0, 2] = 4
    r.add("X1", res, (2, 2))
    r.add("X2", F.zeros((2, 2, 3)), (2, 2))
    assert not r.passed and not r
    assert r.failed_identities() == ["X1"]
    (w,) = r.witnesses
    assert w.indices == (1, 0) and w.residual == (0, 0, 4)
    assert r.checked == ["X1", "X2"]


def test_flags_extend_json():
    r = IdentityReport(F).add_flag("ok", True).add_flag("bad", False, (1,))
    outer = IdentityReport(F).extend(r, "inner:")
    assert outer.failed_identities() == ["inner:bad"]
    js = outer.to_json()
    assert js["passed"] is False
    assert js["witnesses"][0]["identity"] == "inner:bad"


def test_broadcast_residual():
    r = IdentityReport(F)
    r.add("B", F.array([[1, 0]]), (3,))  # constant residual over a batch of 3
    assert len(r.witnesses) == 3
