import random

import numpy as np
import pytest

from apnkit.algebra import (apn_equivalences, check_apn, check_bimodule_characterization,
                            check_derived_identities, check_novikov, derived_ops, novikov,
                            onedim_apn, zero_apn)
from apnkit.exactlin import Field
from apnkit.fixtures import a2, a3, n2

import generators as gen

Q = Field.rational()


def test_mul_examples():
    N = n2(Q)
    e1, e2 = Q.array([1, 0]), Q.array([0, 1])
    assert Q.equal(N.mul(e2, e1), e2)
    assert Q.equal(N.mul(e1 + e2, e1), e1 + e2)
    assert Q.is_zero(zero_apn(Q, 2).associated().mul(e1, e2))


def test_check_novikov():
    assert check_novikov(zero_apn(Q, 2).associated()).passed
    assert check_novikov(n2(Q)).passed
    bad = check_novikov(novikov(Q, 2, {(0, 0): {1: 1}, (1, 0): {0: 1}}))
    assert not bad.passed and bad.witnesses


def test_check_apn_examples():
    assert check_apn(onedim_apn(Q, -2, 1)).passed
    assert check_apn(a3(Q)).passed
    rep = check_apn(onedim_apn(Q, 1, 1))
    assert not rep.passed
    assert ("Aa3", (0, 0, 0)) in {(w.identity, w.indices) for w in rep.witnesses}


def test_associated():
    N = a3(Q).associated()
    assert Q.equal(N.op, a3(Q).succ)
    assert Q.is_zero(zero_apn(Q, 3).associated().op)
    assert onedim_apn(Q, -2, 1).associated().op[0, 0, 0] == -1


def test_derived_ops():
    odot, star = derived_ops(a3(Q))
    assert Q.equal(odot, a3(Q).succ)
    assert star[0, 0, 1] == 2
    assert Q.equal(star, star.transpose(1, 0, 2))
    odot1, _ = derived_ops(onedim_apn(Q, 3, 5))
    assert odot1[0, 0, 0] == 8


def test_derived_identities():
    assert check_derived_identities(a3(Q)).passed
    assert check_derived_identities(zero_apn(Q, 2)).passed
    A = a3(Q)
    prec = A.prec.copy()
    prec[0, 0, 0] = Q.scalar(1)
    assert not check_derived_identities(type(A)(Q, A.succ, prec)).passed


def test_bimodule_characterization():
    assert check_bimodule_characterization(a3(Q)).passed
    assert check_bimodule_characterization(onedim_apn(Q, 0, 0)).passed
    assert check_bimodule_characterization(a2(Q, 1)).passed


@pytest.mark.parametrize("seed", range(6))
def test_random_apn_properties(seed):
    rng = random.Random(seed)
    F = gen.fields(rng)
    A = gen.random_apn(rng, F, rng.choice([2, 3]))
    assert check_novikov(A.associated()).passed
    assert check_bimodule_characterization(A).passed
    assert check_derived_identities(A).passed
    assert all(apn_equivalences(A).values())


def test_mutation_soundness():
    rng = random.Random(11)
    F = Field.gf(5)
    silent = 0
    for _ in range(40):
        A = gen.random_apn(rng, F, 2)
        which = rng.choice(["succ", "prec"])
        t = gen.mutate(rng, F, getattr(A, which))
        B = type(A)(F, t, A.prec) if which == "succ" else type(A)(F, A.succ, t)
        silent += check_apn(B).passed
    # a mutation can land on another valid algebra; it must be rare
    assert silent <= 8


def test_bad_shape():
    with pytest.raises(ValueError):
        type(a3(Q))(Q, Q.zeros((2, 2, 3)), Q.zeros((2, 2, 3)))
    assert np.asarray(a3(Q).succ).shape == (3, 3, 3)
