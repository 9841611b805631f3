from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apnkit.exactlin import (ID3, S12, S13, S23, S132, Field, FieldError, Perm3, as_field, block,
                             contract,
                             det, invert, matmul, nullspace, parse_rational, permute3, rank,
                             solve_linear, tau2)

Q = Field.rational()
GF5 = Field.gf(5)


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    with pytest.raises((FieldError, ValueError)):
        parse_rational("0.5")


def test_as_field():
    assert as_field("Q") == Q
    assert as_field("gf:5") == GF5
    with pytest.raises((FieldError, ValueError)):
        as_field("gf:6")


def test_gf_scalar_rejects_fraction_without_coercion():
    with pytest.raises(FieldError):
        GF5.scalar(Fraction(1, 3), coerce=False)
    assert GF5.scalar(Fraction(1, 3), coerce=True) == 2


def test_solve_identity():
    x = solve_linear(Q, Q.eye(2), Q.array([3, 5]))
    assert Q.equal(x, Q.array([3, 5]))


def test_solve_rank_one_consistent():
    M = Q.array([[1, 2], [2, 4]])
    x = solve_linear(Q, M, Q.array([1, 2]))
    assert x is not None
    assert Q.equal(matmul(Q, M, x.reshape(2, 1)).ravel(), Q.array([1, 2]))


def test_solve_inconsistent():
    assert solve_linear(Q, Q.array([[1, 2], [2, 4]]), Q.array([1, 3])) is None


def test_invert_examples():
    assert Q.equal(invert(Q, Q.eye(3)), Q.eye(3))
    swap = Q.array([[0, 1], [1, 0]])
    assert Q.equal(invert(Q, swap), swap)
    assert invert(Q, Q.array([[1, 1], [1, 1]])) is None
    with pytest.raises(ValueError):
        invert(Q, Q.zeros((2, 3)))


def test_rank_det_nullspace():
    M = Q.array([[1, 2], [2, 4]])
    assert rank(Q, M) == 1
    assert det(Q, M) == 0
    (v,) = nullspace(Q, M)
    assert Q.is_zero(matmul(Q, M, v.reshape(2, 1)))
    assert det(GF5, GF5.array([[2, 1], [1, 1]])) == 1


def test_block():
    B = block(Q, [[Q.eye(1), None], [None, Q.array([[2]])]])
    assert Q.equal(B, Q.array([[1, 0], [0, 2]]))


def test_permute3_examples():
    t = Q.zeros((3, 3, 3))
    t[0, 1, 2] = 1
    assert Q.equal(permute3(t, ID3), t)
    u = permute3(t, S13)
    assert u[2, 1, 0] == 1 and Q.reduce(u).sum() == 1
    v = permute3(t, S132)  # x(x)y(x)z -> z(x)x(x)y
    assert v[2, 0, 1] == 1


def test_tau2():
    s = Q.array([[1, 2], [2, 3]])
    assert Q.equal(tau2(s), s)
    e12 = Q.array([[0, 1], [0, 0]])
    assert Q.equal(tau2(e12), Q.array([[0, 0], [1, 0]]))
    k = Q.array([[0, 1], [-1, 0]])
    assert Q.equal(tau2(k), -k)


perms = st.sampled_from([ID3, S12, S13, S23, S132, S132.inverse()])
gf5_tensors = st.lists(st.integers(0, 4), min_size=8, max_size=8).map(
    lambda xs: GF5.array(xs).reshape(2, 2, 2))


@given(gf5_tensors, perms, perms)
@settings(max_examples=60, deadline=None)
def test_permute3_composition(t, sigma, rho):
    assert np.array_equal(permute3(permute3(t, rho), sigma), permute3(t, sigma * rho))
    assert np.array_equal(permute3(permute3(t, sigma), sigma.inverse()), t)


@given(gf5_tensors)
@settings(max_examples=30, deadline=None)
def test_swap_involution(t):
    assert np.array_equal(permute3(permute3(t, S12), S12), t)


@given(st.lists(st.fractions(max_denominator=6), min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_rational_inverse_exact(xs):
    M = Q.array(xs).reshape(2, 2)
    inv = invert(Q, M)
    if det(Q, M) == 0:
        assert inv is None
    else:
        assert Q.equal(matmul(Q, M, inv), Q.eye(2))


@given(st.lists(st.integers(0, 4), min_size=9, max_size=9), st.lists(st.integers(0, 4), min_size=3,
                                                                        max_size=3))
@settings(max_examples=60, deadline=None)
def test_gf_solve_back_substitution(ms, bs):
    M = GF5.array(ms).reshape(3, 3)
    b = GF5.array(bs)
    x = solve_linear(GF5, M, b)
    if x is not None:
        assert GF5.equal(matmul(GF5, M, x.reshape(3, 1)).ravel(), b)


def test_bad_perm():
    with pytest.raises(ValueError):
        Perm3((0, 0, 1))


@given(st.lists(st.fractions(max_denominator=7), min_size=6, max_size=6),
       st.lists(st.fractions(max_denominator=5), min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_contract_matches_fraction_arithmetic(ms, vs):
    M = Q.array(ms).reshape(2, 3)
    v = Q.array(vs)
    naive = Q.array([sum((M[i, j] * v[j] for j in range(3)), Fraction(0)) for i in range(2)])
    assert Q.equal(contract(Q, "ij,j->i", M, v), naive)


def test_contract_big_integers_fall_back_exactly():
    big = 10 ** 30
    M = Q.array([[big, Fraction(1, 3)], [1, -big]])
    out = contract(Q, "ij,jk->ik", M, M)
    assert out[0, 0] == big * big + Fraction(1, 3)
    assert out[1, 1] == Fraction(1, 3) + big * big
    G = Field.gf(7)
    assert G.equal(contract(G, "ij,jk->ik", G.array([[3, 4], [5, 6]]), G.eye(2)),
                   G.array([[3, 4], [5, 6]]))
