import pytest

from apnkit.algebra import check_apn, check_novikov, zero_apn
from apnkit.bialgebra import check_invariant, dualize_cobracket, zero_cobracket
from apnkit.exactlin import Field
from apnkit.fixtures import a3, worked_example
from apnkit.forms import (apn_from_quasi_frobenius, build_double_construction, canonical_form,
                          check_quadratic_apn, check_quasi_frobenius, double_apn_from_pair,
                          dual_novikov_matched_pair, mp1_equivalences, omega_sharp, s_omega)
from apnkit.matched_pair import NovikovMatchedPair
from apnkit.representation import NovikovRep

Q = Field.rational()


@pytest.fixture(scope="module")
def double():
    hat, _, delta = worked_example(Q)
    return build_double_construction(dual_novikov_matched_pair(hat, dualize_cobracket(delta)))


def test_quasi_frobenius_examples(double):
    assert check_quasi_frobenius(zero_apn(Q, 2).associated(), Q.eye(2)).passed
    assert check_quasi_frobenius(double.algebra, double.omega).passed
    rep = check_quasi_frobenius(zero_apn(Q, 2).associated(), Q.array([[1, 1], [1, 1]]))
    assert "nondegenerate" in rep.failed_identities()


def test_quadratic_examples(double):
    C = apn_from_quasi_frobenius(double.algebra, double.omega)
    assert check_apn(C).passed
    assert check_quadratic_apn(C, double.omega).passed
    assert check_quadratic_apn(zero_apn(Q, 2), Q.eye(2)).passed
    assert not check_quadratic_apn(a3(Q), Q.eye(3)).passed


def test_compatible_sum_law(double):
    C = apn_from_quasi_frobenius(double.algebra, double.omega)
    assert Q.equal(C.circ, double.algebra.op)
    Z = apn_from_quasi_frobenius(zero_apn(Q, 2).associated(), Q.array([[0, 1], [-1, 0]]))
    assert Q.is_zero(Z.succ) and Q.is_zero(Z.prec)


def test_round_trip_quadratic_to_quasi_frobenius(double):
    C = apn_from_quasi_frobenius(double.algebra, double.omega)
    N = C.associated()
    assert check_novikov(N).passed and check_quasi_frobenius(N, double.omega).passed
    C2 = apn_from_quasi_frobenius(N, double.omega)
    assert C2 == C


def test_double_construction_trivial():
    A = a3(Q)
    Z = zero_apn(Q, 3)
    mp = dual_novikov_matched_pair(A, Z)
    dc = build_double_construction(mp)
    assert dc.n == 3 and Q.equal(dc.omega, canonical_form(Q, 3))
    assert check_quasi_frobenius(dc.algebra, dc.omega).passed


def test_double_construction_rejects_non_pair():
    N = a3(Q).associated()
    l = Q.zeros((3, 3, 3))
    l[0, 0, 0] = Q.scalar(1)
    with pytest.raises(ValueError):
        build_double_construction(NovikovMatchedPair(N, N, NovikovRep(Q, l, l), NovikovRep(Q, l, l)))


def test_omega_sharp_and_s_omega():
    assert Q.equal(s_omega(Q, Q.eye(2)), Q.eye(2))
    assert Q.equal(s_omega(Q, Q.array([[2, 0], [0, 3]])),
                   Q.array([[Q.scalar("1/2"), 0], [0, Q.scalar("1/3")]]))
    assert Q.equal(omega_sharp(Q, Q.eye(2)), Q.eye(2))


def test_s_omega_symmetric_invariant(double):
    C = apn_from_quasi_frobenius(double.algebra, double.omega)
    s = s_omega(Q, double.omega)
    assert Q.equal(s, s.T)
    assert check_invariant(C, s).passed


@pytest.mark.parametrize("which", ["worked", "a3_zero"])
def test_mp1_equivalences(which):
    if which == "worked":
        hat, _, delta = worked_example(Q)
    else:
        hat, delta = a3(Q), zero_cobracket(Q, 3)
    res = mp1_equivalences(hat, dualize_cobracket(delta))
    assert all(res.values())
    assert check_apn(double_apn_from_pair(hat, dualize_cobracket(delta))).passed


def test_mp1_equivalences_agree_when_failing():
    A = a3(Q)
    B = type(A)(Q, A.succ, A.succ)  # not dual to a compatible cobracket
    res = mp1_equivalences(A, B)
    assert len(set(res.values())) == 1
