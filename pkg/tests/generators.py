"""Seeded random instances over small prime fields for the equivalence tests."""

from __future__ import annotations

import random

from apnkit.algebra import APNAlgebra, NovikovAlgebra, check_apn, check_novikov
from apnkit.bialgebra.coalgebra import Cobracket
from apnkit.exactlin import Field
from apnkit.fixtures import n3_nonstrong
from apnkit.matched_pair import APNMatchedPair, split_apn
from apnkit.representation import APNRep, regular_novikov_rep


def sparse_tensor(rng: random.Random, F: Field, shape, terms: int):
    t = F.zeros(shape)
    for _ in range(terms):
        t[tuple(rng.randrange(d) for d in shape)] = rng.randrange(1, F.p)
    return t


def random_apn(rng: random.Random, F: Field, n: int, lo: int = 1, hi: int = 6,
               nonzero: bool = True) -> APNAlgebra:
    """Rejection sampling of sparse structure constants until check_apn passes."""
    while True:
        s = F.zeros((n, n, n))
        q = F.zeros((n, n, n))
        for _ in range(rng.randint(lo, hi)):
            arr = rng.choice([s, q])
            arr[tuple(rng.randrange(n) for _ in range(3))] = rng.randrange(1, F.p)
        A = APNAlgebra(F, s, q)
        if (not nonzero or s.any() or q.any()) and check_apn(A).passed:
            return A


def random_novikov(rng: random.Random, F: Field, n: int, hi: int = 5) -> NovikovAlgebra:
    while True:
        N = NovikovAlgebra(F, sparse_tensor(rng, F, (n, n, n), rng.randint(1, hi)))
        if check_novikov(N).passed:
            return N


def random_skew(rng: random.Random, F: Field, n: int):
    s = F.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randrange(F.p)
            s[i, j] = v
            s[j, i] = -v
    return F.reduce(s)


def random_cobracket(rng: random.Random, F: Field, n: int, terms: int = 4) -> Cobracket:
    return Cobracket(F, sparse_tensor(rng, F, (n,) * 3, rng.randint(0, terms)),
                     sparse_tensor(rng, F, (n,) * 3, rng.randint(0, terms)))


def mutate(rng: random.Random, F: Field, arr):
    arr = arr.copy()
    idx = tuple(rng.randrange(d) for d in arr.shape)
    arr[idx] = (int(arr[idx]) + rng.randrange(1, F.p)) % F.p
    return F.reduce(arr)


def fields(rng: random.Random):
    return Field.gf(rng.choice([3, 5]))


# ---------------------------------------------------------------- instance families


def skew_instances(seed: int, count: int):
    """(A, s) pairs; half the tensors are YBE solutions found by search."""
    from apnkit.search import search_ybe_solutions
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        F = fields(rng)
        n = rng.choice([2, 3])
        A = random_apn(rng, F, n)
        if len(out) % 2:
            sols = search_ybe_solutions(A, skew_only=True, budget=5000).items
            nonzero = [s for s in sols if s.any()]
            s = rng.choice(nonzero or sols)
        else:
            s = random_skew(rng, F, n)
        out.append((A, s))
    return out


def anti_o_instances(seed: int, count: int, min_nonstrong: int = 10):
    """(N, rep, T) with T an anti-O-operator; some are deliberately non-strong."""
    from apnkit.operators import check_anti_o_operator, induced_apn
    rng = random.Random(seed)
    out = []
    nonstrong = 0
    special = n3_nonstrong(Field.gf(3))
    while len(out) < count or nonstrong < min_nonstrong:
        use_special = nonstrong < min_nonstrong and len(out) % 2 == 0
        if use_special:
            N, F, n = special, special.field, 3
        else:
            F = fields(rng)
            n = rng.choice([2, 3])
            N = random_novikov(rng, F, n)
        rep = regular_novikov_rep(N)
        T = sparse_tensor(rng, F, (n, n), rng.randint(1, 4))
        if not check_anti_o_operator(N, rep, T).passed:
            continue
        _, strong = induced_apn(N, rep, T)
        nonstrong += not strong
        out.append((N, rep, T))
    return out


def matched_pair_instances(seed: int, count: int):
    """Split random APN algebras; every other pair has one mutated action."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        F = fields(rng)
        n = rng.choice([2, 3])
        B = random_apn(rng, F, n)
        mp = split_apn(B, rng.randrange(1, n))
        if len(out) % 2:
            maps = list(mp.rep1.maps() + mp.rep2.maps())
            k = rng.randrange(8)
            maps[k] = mutate(rng, F, maps[k])
            mp = APNMatchedPair(mp.A1, mp.A2, APNRep(F, *maps[:4]), APNRep(F, *maps[4:]))
        out.append(mp)
    return out


def bialgebra_instances(seed: int, count: int):
    """(A, Delta) with Delta dual to an APN algebra on A*; some are coboundaries."""
    from apnkit.bialgebra.coalgebra import cobracket_from_dual
    from apnkit.bialgebra.ybe import coboundary_delta
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        F = fields(rng)
        n = rng.choice([2, 3])
        A = random_apn(rng, F, n)
        if len(out) % 3 == 0:
            delta = coboundary_delta(A, random_skew(rng, F, n))
            if not check_apn(_dual(delta)).passed:
                continue
        else:
            delta = cobracket_from_dual(random_apn(rng, F, n, nonzero=False))
        out.append((A, delta))
    return out


def _dual(delta):
    from apnkit.bialgebra.coalgebra import dualize_cobracket
    return dualize_cobracket(delta)
