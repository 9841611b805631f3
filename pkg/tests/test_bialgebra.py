import random

import numpy as np
import pytest

from apnkit.algebra import APNAlgebra, apn, check_apn, zero_apn
from apnkit.bialgebra import (PLACEMENTS, Cobracket, T_from_s, b2_as_printed, canonical_s,
                              check_apn_bialgebra, check_apn_coalgebra,
                              check_bialgebra_via_matched_pair, check_factorizable,
                              check_invariant, check_quasi_triangular, check_s_relations,
                              check_triangular, coboundary_delta, double_bialgebra,
                              dualize_cobracket, factorize, factorizable_to_rb, is_solution,
                              phi_iso, placement_product, rb_to_factorizable, s_from_T,
                              semidirect_rb_quadratic, semidirect_ybe_solution,
                              theorem_ya1_equivalences, ybe_residual, zero_cobracket)
from apnkit.bialgebra.coalgebra import check_apn_coalgebra_direct
from apnkit.bialgebra.factorizable import (ad_alternative_forms, ad_structure, check_fs,
                                           check_phi_iso, check_quadratic_rb, direct_sum,
                                           check_homomorphism, relative_rb_equivalences)
from apnkit.bialgebra.ybe import (check_db4, dual_products_from_s, ye8_three_way)
from apnkit.exactlin import Field, invert
from apnkit.fixtures import a2, a3, worked_example, worked_T
from apnkit.operators import AAPNStructure, check_a_apn_algebra
from apnkit.representation import regular_apn_rep

import generators as gen

Q = Field.rational()


@pytest.fixture(scope="module")
def worked():
    return worked_example(Q)


@pytest.fixture(scope="module")
def double(worked):
    hat, _, delta = worked
    return double_bialgebra(hat, delta)


# ---------------------------------------------------------------- coalgebras


def test_dualize(worked):
    z = dualize_cobracket(zero_cobracket(Q, 3))
    assert z == zero_apn(Q, 3)
    assert check_apn(dualize_cobracket(worked[2])).passed


def test_coalgebra_examples(worked):
    assert check_apn_coalgebra(zero_cobracket(Q, 2)).passed
    assert check_apn_coalgebra(worked[2]).passed
    d = worked[2]
    ds = d.d_succ.copy()
    ds[0, 0, 0] = ds[0, 0, 0] + 1
    bad = Cobracket(Q, ds, d.d_prec)
    assert not check_apn_coalgebra_direct(bad).passed
    assert not check_apn(dualize_cobracket(bad)).passed


def test_coalgebra_routes_agree_per_identity():
    rng = random.Random(3)
    F = Field.gf(5)
    for _ in range(30):
        d = gen.random_cobracket(rng, F, 2)
        direct = {t[2:] for t in check_apn_coalgebra_direct(d).failed_identities()}
        dual = {t[2:] for t in check_apn(dualize_cobracket(d)).failed_identities()}
        assert direct == dual


def test_bialgebra_examples(worked):
    hat, _, delta = worked
    assert check_apn_bialgebra(a3(Q), zero_cobracket(Q, 3)).passed
    assert check_apn_bialgebra(hat, delta).passed
    assert check_bialgebra_via_matched_pair(hat, delta).passed


def test_printed_b2_counterexample():
    # a bialgebra (by the matched-pair criterion) on which the printed B2 fails
    F = Field.gf(3)
    A = apn(F, 2, {(0, 0): {1: 1}, (0, 1): {1: 2}})
    ds, dp = F.zeros((2, 2, 2)), F.zeros((2, 2, 2))
    ds[0, 1, 1], dp[0, 1, 1] = 1, 2
    delta = Cobracket(F, ds, dp)
    assert check_apn(A).passed and check_apn_coalgebra(delta).passed
    assert check_bialgebra_via_matched_pair(A, delta).passed
    assert check_apn_bialgebra(A, delta).passed
    assert not F.is_zero(b2_as_printed(A, delta))


# ---------------------------------------------------------------- coboundary and YBE


def test_coboundary_zero():
    d = coboundary_delta(a3(Q), Q.zeros((3, 3)))
    assert Q.is_zero(d.d_succ) and Q.is_zero(d.d_prec)


def test_placement_product_examples():
    A = a3(Q)
    s = Q.zeros((3, 3))
    s[0, 1] = 1  # e1 (x) e2
    # s12 * s23 = e1 (x) (e2 * e1) (x) e2 = 0 since e2 > e1 = 0
    assert Q.is_zero(placement_product(Q, s, s, A.succ, "12*23"))
    t = Q.zeros((3, 3))
    t[0, 0] = 1
    # s13 * s12 with s = e1 (x) e1: (e1 > e1) (x) e1 (x) e1
    r = placement_product(Q, t, t, A.succ, "13*12")
    assert r[1, 0, 0] == 1 and (r != 0).sum() == 1
    assert len(PLACEMENTS) == 17


def test_ybe_residual_examples(worked):
    hat, s, _ = worked
    assert Q.is_zero(ybe_residual(a3(Q), Q.zeros((3, 3))))
    assert Q.is_zero(ybe_residual(hat, s))
    e11 = Q.zeros((3, 3))
    e11[0, 0] = 1
    assert not Q.is_zero(ybe_residual(a3(Q), e11))


def test_T_s_round_trip():
    s = Q.array([[1, 2], [3, 4]])
    assert Q.equal(s_from_T(Q, T_from_s(Q, s)), s)
    assert Q.equal(T_from_s(Q, s), s.T)


def test_triangular_and_invariant(worked):
    hat, s, _ = worked
    assert check_invariant(hat, s + s.T).passed
    assert check_triangular(hat, s).passed
    assert check_quasi_triangular(hat, s).passed
    assert not check_factorizable(hat, s).passed


def test_dual_products_match_dualized(worked):
    hat, s, delta = worked
    assert dual_products_from_s(hat, s) == dualize_cobracket(delta)
    z = dual_products_from_s(a3(Q), Q.zeros((3, 3)))
    assert Q.is_zero(z.succ) and Q.is_zero(z.prec)


def test_semidirect_ybe_solution():
    A = a2(Q, 1)
    rep = regular_apn_rep(A)
    hat, s = semidirect_ybe_solution(A, rep, worked_T(Q))
    assert Q.is_zero(ybe_residual(hat, s))
    hat0, s0 = semidirect_ybe_solution(A, rep, Q.zeros((2, 2)))
    assert Q.is_zero(s0) and is_solution(hat0, s0)
    hat1, s1 = semidirect_ybe_solution(A, rep, Q.array([[1, 0], [0, 1]]))
    assert not Q.is_zero(ybe_residual(hat1, s1))


def test_skew_solution_gives_bialgebra():
    for A, s in gen.skew_instances(seed=31, count=16):
        if is_solution(A, s):
            assert check_apn_bialgebra(A, coboundary_delta(A, s)).passed
            assert check_db4(A, s).passed


def test_bialgebra_without_ybe_counterexample():
    # s = e1 (x) e2 - e2 (x) e1 on e1 > e1 = c e2: a bialgebra, yet not a solution
    for c in (1, 2, -3):
        A = a2(Q, c)
        s = Q.array([[0, 1], [-1, 0]])
        delta = coboundary_delta(A, s)
        assert check_apn_bialgebra(A, delta).passed
        assert check_bialgebra_via_matched_pair(A, delta).passed
        res = ybe_residual(A, s)
        expected = Q.zeros((2, 2, 2))
        expected[1, 1, 1] = Q.scalar(2 * c)
        assert Q.equal(res, expected)
        assert delta.d_succ[0, 1, 1] == -3 * c and delta.d_prec[0, 1, 1] == 2 * c


def test_s_relations():
    rng = random.Random(17)
    printed_failures = 0
    for _ in range(30):
        F = gen.fields(rng)
        n = rng.choice([2, 3])
        A = gen.random_apn(rng, F, n)
        s = gen.random_skew(rng, F, n)
        assert check_s_relations(A, s).passed
        rep = check_s_relations(A, s, printed=True)
        printed_failures += not rep.passed
        assert set(rep.failed_identities()) <= {"S5=-cyc.S1"}
    assert printed_failures > 0


def test_ye8_three_way():
    for A, s in gen.skew_instances(seed=41, count=12):
        assert len(set(ye8_three_way(A, s).values())) == 1


# ---------------------------------------------------------------- doubles and factorization


def test_double_examples(double):
    assert double.algebra.dim == 8
    assert check_factorizable(double.algebra, double.s).passed
    D3 = double_bialgebra(a3(Q), zero_cobracket(Q, 3))
    assert D3.algebra.dim == 6 and check_factorizable(D3.algebra, D3.s).passed
    assert Q.equal(double.s, canonical_s(Q, 4))


def test_skew_never_factorizable():
    A = a2(Q)
    s = Q.array([[0, 1], [-1, 0]])
    assert not check_factorizable(A, s).passed


def test_factorize(double):
    B, s = double.algebra, double.s
    x = Q.zeros(8)
    x[0] = 1
    x1, x2 = factorize(B, s, x)
    assert Q.equal(x1 - x2, x)
    z1, z2 = factorize(B, s, Q.zeros(8))
    assert Q.is_zero(z1) and Q.is_zero(z2)


def test_phi(double):
    B, s = double.algebra, double.s
    phi = phi_iso(B, s)
    assert invert(Q, phi) is not None
    assert check_phi_iso(B, s).passed
    assert check_homomorphism(B, B, Q.eye(8)).passed
    assert direct_sum(a2(Q), a2(Q)).dim == 4


def test_invariant_symmetric_part_equivalences(double, worked):
    r = theorem_ya1_equivalences(double.algebra, double.s)
    assert r["consistent"] and all(r["conditions"].values())
    r = theorem_ya1_equivalences(*worked[:2])
    assert r["consistent"] and all(r["residual_zero"].values())


def test_invariant_symmetric_part_conditions_fail_together():
    # symmetric part zero (invariant), s not a solution
    A = a2(Q, 1)
    s = Q.array([[0, 1], [-1, 0]])
    r = theorem_ya1_equivalences(A, s)
    assert r["consistent"]
    assert not all(r["conditions"].values())


# ---------------------------------------------------------------- Rota-Baxter correspondence


@pytest.mark.parametrize("lam", [1, -1, 2])
def test_rb_round_trip(double, lam):
    B, s = double.algebra, double.s
    P, w = factorizable_to_rb(B, s, lam)
    assert check_fs(Q, P, w, lam).passed
    assert check_quadratic_rb(B, P, w, lam).passed
    assert Q.equal(rb_to_factorizable(B, P, w, lam), s)


def test_semidirect_rb_quadratic():
    A = a2(Q)
    P = Q.array([[-1, 0], [1, -1]])
    D, w, Phat, s = semidirect_rb_quadratic(A, P, 1)
    assert check_quadratic_rb(D, Phat, w, 1).passed
    assert Q.equal(rb_to_factorizable(D, Phat, w, 1), s)
    assert check_quadratic_rb(D, Q.zeros((4, 4)), w, 0).passed


def test_ad_structures(double):
    B, s = double.algebra, double.s
    r = s + s.T
    assert check_invariant(B, r).passed
    assert ad_alternative_forms(B, r).passed
    assert check_a_apn_algebra(ad_structure(B, r)).passed
    assert all(relative_rb_equivalences(B, s).values())
    assert isinstance(ad_structure(B, r), AAPNStructure)


def test_cobracket_shape_error():
    with pytest.raises(ValueError):
        Cobracket(Q, Q.zeros((2, 2, 2)), Q.zeros((3, 3, 3)))
    assert isinstance(a3(Q), APNAlgebra)
    assert np.asarray(canonical_s(Q, 2)).shape == (4, 4)
