"""Brute-force enumeration over small prime fields and rational grids.

Candidates come from a deterministic odometer, are tested in chunks (optionally
in worker processes) and merged back in candidate order. Every hit is
re-checked in the calling process before it is returned.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import partial

import numpy as np

from .algebra import APNAlgebra, check_apn
from .exactlin import Field
from .operators import check_o_operator_apn
from .representation import APNRep

DEFAULT_BUDGET = 200_000
_CHUNK = 512


@dataclass
class SearchResult:
    items: list = dc_field(default_factory=list)
    truncated: bool = False
    examined: int = 0

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


def value_set(field: Field, values=None) -> list:
    """Field elements (GF(p)) or an explicit grid, in a fixed order."""
    if values is None:
        if field.is_rational:
            raise ValueError("searching over Q needs an explicit grid of values")
        return field.elements()
    out = []
    for v in values:
        v = field.scalar(v)
        if not any(v == w for w in out):
            out.append(v)
    return out


def int_grid(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1))


# ---------------------------------------------------------------- driver


def _run(candidates, test, budget, workers) -> SearchResult:
    """Feed `candidates` (tuples) to the picklable predicate `test` in order."""
    budget = DEFAULT_BUDGET if budget is None else int(budget)
    res = SearchResult()
    it = iter(candidates)

    def chunks():
        while res.examined < budget:
            chunk = list(itertools.islice(it, min(_CHUNK, budget - res.examined)))
            if not chunk:
                return
            res.examined += len(chunk)
            yield chunk
        if next(it, None) is not None:
            res.truncated = True

    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            # map preserves submission order, so the merge is deterministic
            for chunk, mask in _ordered_map(ex, test, chunks(), 4 * workers):
                res.items.extend(c for c, ok in zip(chunk, mask) if ok)
    else:
        for chunk in chunks():
            mask = test(chunk)
            res.items.extend(c for c, ok in zip(chunk, mask) if ok)
    return res


def _ordered_map(ex, test, chunk_iter, window):
    pending = []
    for chunk in chunk_iter:
        pending.append((chunk, ex.submit(test, chunk)))
        if len(pending) >= window:
            chunk0, fut = pending.pop(0)
            yield chunk0, fut.result()
    for chunk0, fut in pending:
        yield chunk0, fut.result()


# ---------------------------------------------------------------- APN algebras


def _apn_from_slots(field: Field, dim: int, slots) -> APNAlgebra:
    c = field.array(list(slots)).reshape((2, dim, dim, dim))
    return APNAlgebra(field, c[0], c[1])


def _test_apn(field, dim, chunk):
    return [check_apn(_apn_from_slots(field, dim, s)).passed for s in chunk]


def apn_candidates(field: Field, dim: int, values, max_nonzero=None):
    """Slot vectors (succ constants then prec constants) in lexicographic order.

    With a sparsity bound only vectors with at most `max_nonzero` nonzero
    slots are produced, still in lexicographic order of the value indices.
    """
    nslots = 2 * dim ** 3
    zero = field.scalar(0)
    vals = [zero] + [v for v in values if not field.is_zero_scalar(v)]
    if max_nonzero is None or max_nonzero >= nslots:
        yield from itertools.product(vals, repeat=nslots)
        return

    def rec(prefix, left, budget):
        if left == 0:
            yield tuple(prefix)
            return
        for k, v in enumerate(vals):
            if k and budget == 0:
                break
            prefix.append(v)
            yield from rec(prefix, left - 1, budget - (1 if k else 0))
            prefix.pop()
    yield from rec([], nslots, max_nonzero)


def enumerate_apn(field: Field, dim: int, values=None, max_nonzero=None,
                  budget=None, workers: int = 1) -> SearchResult:
    if dim < 1:
        raise ValueError("dim must be positive")
    vals = value_set(field, values)
    res = _run(apn_candidates(field, dim, vals, max_nonzero),
               partial(_test_apn, field, dim), budget, workers)
    algs = [_apn_from_slots(field, dim, s) for s in res.items]
    res.items = [A for A in algs if check_apn(A).passed]
    return res


# ---------------------------------------------------------------- YBE solutions


def _free_positions(field: Field, n: int, skew_only: bool, support=None):
    """Positions carrying a free parameter; skew tensors use the upper triangle."""
    allowed = None if support is None else {tuple(p) for p in support}
    pos = []
    for i in range(n):
        for j in range(n):
            if skew_only:
                if i > j or (i == j and field.p != 2):
                    continue
                if allowed is not None and (i, j) not in allowed and (j, i) not in allowed:
                    continue
            elif allowed is not None and (i, j) not in allowed:
                continue
            pos.append((i, j))
    return pos


def _tensor(field: Field, n: int, pos, vals, skew_only: bool) -> np.ndarray:
    s = field.zeros((n, n))
    for (i, j), v in zip(pos, vals):
        s[i, j] = v
        if skew_only and i != j:
            s[j, i] = -v
    return field.reduce(s)


def _test_ybe(A, pos, skew_only, chunk):
    from .bialgebra.ybe import is_solution
    return [is_solution(A, _tensor(A.field, A.dim, pos, v, skew_only)) for v in chunk]


def search_ybe_solutions(A: APNAlgebra, values=None, skew_only: bool = False, support=None,
                         budget=None, workers: int = 1) -> SearchResult:
    """All 2-tensors over the value grid with zero YBE residual.

    `support` restricts which entries may be nonzero (for skew tensors a
    pair and its mirror count as one parameter).
    """
    from .bialgebra.ybe import is_solution
    F = A.field
    vals = value_set(F, values)
    pos = _free_positions(F, A.dim, skew_only, support)
    cand = itertools.product(vals, repeat=len(pos))
    res = _run(cand, partial(_test_ybe, A, pos, skew_only), budget, workers)
    out = []
    for v in res.items:
        s = _tensor(F, A.dim, pos, v, skew_only)
        if is_solution(A, s) and (not skew_only or F.is_zero(s + s.T)):
            out.append(s)
    res.items = out
    return res


# ---------------------------------------------------------------- O-operators


def _test_o(A, rep, chunk):
    F = A.field
    return [check_o_operator_apn(A, rep, F.array(list(t)).reshape(A.dim, rep.dim)).passed
            for t in chunk]


def search_o_operators(A: APNAlgebra, rep: APNRep, values=None, budget=None,
                       workers: int = 1) -> SearchResult:
    """All T: V -> A with entries in the grid passing the O-operator laws (row-major order)."""
    F = A.field
    vals = value_set(F, values)
    cand = itertools.product(vals, repeat=A.dim * rep.dim)
    res = _run(cand, partial(_test_o, A, rep), budget, workers)
    out = []
    for t in res.items:
        T = F.array(list(t)).reshape(A.dim, rep.dim)
        if check_o_operator_apn(A, rep, T).passed:
            out.append(T)
    res.items = out
    return res
