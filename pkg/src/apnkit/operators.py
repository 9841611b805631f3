"""Anti-O-operators on Novikov algebras, O-operators and (relative)
Rota-Baxter operators on APN algebras.

A linear map T: V -> A is a (dim A) x (dim V) matrix acting on columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import APNAlgebra, NovikovAlgebra, check_apn
from .exactlin import Field, contract, invert
from .multilinear import act, apply, basis_vars, prod
from .report import IdentityReport
from .representation import (APNRep, NovikovRep, check_apn_rep, regular_apn_rep,
                             regular_novikov_rep, sum_structure)


def _as_map(field: Field, T, rows: int, cols: int) -> np.ndarray:
    T = field.reduce(np.asarray(T))
    if T.shape != (rows, cols):
        raise ValueError(f"linear map must have shape {(rows, cols)}, got {T.shape}")
    return T


# ---------------------------------------------------------------- anti-O


def check_anti_o_operator(N: NovikovAlgebra, rep: NovikovRep, T) -> IdentityReport:
    F = N.field
    T = _as_map(F, T, N.dim, rep.dim)
    u, v = basis_vars(F, [rep.dim, rep.dim])
    Tu, Tv = apply(F, T, u), apply(F, T, v)
    res = prod(F, N.op, Tu, Tv) + apply(F, T, act(F, rep.l, Tu, v) + act(F, rep.r, Tv, u))
    return IdentityReport(F).add("Ao10", res, (rep.dim, rep.dim))


def check_strong(N: NovikovAlgebra, rep: NovikovRep, T) -> IdentityReport:
    F = N.field
    T = _as_map(F, T, N.dim, rep.dim)
    m = rep.dim
    u, v, w = basis_vars(F, [m, m, m])
    Tu, Tv, Tw = (apply(F, T, z) for z in (u, v, w))

    def o(a, b):
        return prod(F, N.op, a, b)

    res = (act(F, rep.l, o(Tu, Tv) - o(Tv, Tu), w) + act(F, rep.r, o(Tu, Tw), v)
           - act(F, rep.r, o(Tv, Tw), u))
    return IdentityReport(F).add("Ao1", res, (m, m, m))


def induced_apn(N: NovikovAlgebra, rep: NovikovRep, T) -> tuple[APNAlgebra, bool]:
    """u > v = -l(Tu)v, u < v = -r(Tv)u on V, and whether T is strong."""
    F = N.field
    T = _as_map(F, T, N.dim, rep.dim)
    # l(T e_i) = sum_k T[k, i] l[k]
    lT = contract(F, "ji,jab->iab", T, rep.l)
    rT = contract(F, "ji,jab->iab", T, rep.r)
    succ = F.reduce(-lT.transpose(0, 2, 1))       # succ[i, j, k] = -(l(Te_i) e_j)_k
    prec = F.reduce(-rT.transpose(2, 0, 1))       # prec[i, j, k] = -(r(Te_j) e_i)_k
    return APNAlgebra(F, succ, prec), check_strong(N, rep, T).passed


def induced_residuals(V: APNAlgebra) -> dict:
    """Ao3..Ao6 for a pair of operations; Ao6 is what strongness adds."""
    F = V.field
    m = V.dim
    u, v, w = basis_vars(F, [m, m, m])

    def op(c):
        return lambda a, b: prod(F, c, a, b)

    sc, pr, dot = op(V.succ), op(V.prec), op(V.circ)
    return {
        "Ao3": sc(dot(v, u) - dot(u, v), w) - sc(u, sc(v, w)) + sc(v, sc(u, w)),
        "Ao4": pr(sc(u, w), v) - sc(u, pr(w, v)) - pr(w, dot(u, v)) - pr(pr(w, u), v),
        "Ao5a": sc(dot(u, v), w) + pr(sc(u, w), v),
        "Ao5b": pr(pr(w, v), u) - pr(pr(w, u), v),
        "Ao6": pr(dot(u, v) - dot(v, u), w) - sc(u, dot(v, w)) + sc(v, dot(u, w)),
    }


def check_induced(V: APNAlgebra, tags=("Ao3", "Ao4", "Ao5a", "Ao5b", "Ao6")) -> IdentityReport:
    out = IdentityReport(V.field)
    for tag, res in induced_residuals(V).items():
        if tag in tags:
            out.add(tag, res, (V.dim,) * 3)
    return out


def compatible_apn_from_anti_o(N: NovikovAlgebra, rep: NovikovRep, T) -> APNAlgebra:
    """Transport the induced structure along an invertible T to A itself."""
    F = N.field
    T = _as_map(F, T, N.dim, rep.dim)
    Ti = invert(F, T) if T.shape[0] == T.shape[1] else None
    if Ti is None:
        raise ValueError("anti-O-operator is not invertible")
    V, _ = induced_apn(N, rep, T)
    x, y = basis_vars(F, [N.dim, N.dim])
    ux, uy = apply(F, Ti, x), apply(F, Ti, y)
    succ = apply(F, T, prod(F, V.succ, ux, uy))
    prec = apply(F, T, prod(F, V.prec, ux, uy))
    return APNAlgebra(F, succ, prec)


def check_anti_rota_baxter(N: NovikovAlgebra, T) -> IdentityReport:
    return check_anti_o_operator(N, regular_novikov_rep(N), T)


def check_strong_anti_rota_baxter(N: NovikovAlgebra, T) -> IdentityReport:
    return check_strong(N, regular_novikov_rep(N), T)


# ---------------------------------------------------------------- O-operators


def check_o_operator_novikov(N: NovikovAlgebra, rep: NovikovRep, T, weight=0, V_op=None) -> IdentityReport:
    """T(u) o T(v) = T(l(Tu)v + r(Tv)u + weight u o_V v)."""
    F = N.field
    T = _as_map(F, T, N.dim, rep.dim)
    m = rep.dim
    u, v = basis_vars(F, [m, m])
    Tu, Tv = apply(F, T, u), apply(F, T, v)
    inner = act(F, rep.l, Tu, v) + act(F, rep.r, Tv, u)
    if V_op is not None:
        inner = inner + F.scalar(weight) * prod(F, V_op, u, v)
    res = prod(F, N.op, Tu, Tv) - apply(F, T, inner)
    return IdentityReport(F).add("On", res, (m, m))


def check_o_operator_apn(A: APNAlgebra, rep: APNRep, T, weight=0, V: APNAlgebra | None = None) -> IdentityReport:
    """The succ and prec laws of a (relative, weighted) O-operator."""
    F = A.field
    T = _as_map(F, T, A.dim, rep.dim)
    m = rep.dim
    u, v = basis_vars(F, [m, m])
    Tu, Tv = apply(F, T, u), apply(F, T, v)
    lam = F.scalar(weight)
    out = IdentityReport(F)
    for tag, c, l, r, cv in (("O.succ", A.succ, rep.l_succ, rep.r_succ, V.succ if V is not None else None),
                             ("O.prec", A.prec, rep.l_prec, rep.r_prec, V.prec if V is not None else None)):
        inner = act(F, l, Tu, v) + act(F, r, Tv, u)
        if cv is not None:
            inner = inner + lam * prod(F, cv, u, v)
        out.add(tag, prod(F, c, Tu, Tv) - apply(F, T, inner), (m, m))
    return out


def check_rota_baxter_apn(A: APNAlgebra, P, weight) -> IdentityReport:
    """P(x)*P(y) = P(P(x)*y + x*P(y) + weight x*y) for both operations."""
    return check_o_operator_apn(A, regular_apn_rep(A), P, weight, A)


def check_rota_baxter_novikov(N: NovikovAlgebra, P, weight) -> IdentityReport:
    return check_o_operator_novikov(N, regular_novikov_rep(N), P, weight, N.op)


# ---------------------------------------------------------------- A-APN algebras


@dataclass(frozen=True, eq=False)
class AAPNStructure:
    """An APN algebra V together with an action of A on V."""

    A: APNAlgebra
    rep: APNRep
    V: APNAlgebra

    def __post_init__(self):
        if self.rep.l_succ.shape != (self.A.dim, self.V.dim, self.V.dim):
            raise ValueError("representation must be A -> End(V)")

    def sum_algebra(self) -> APNAlgebra:
        F = self.A.field
        r = self.rep
        return APNAlgebra(F, sum_structure(F, self.A.succ, self.V.succ, r.l_succ, r.r_succ),
                          sum_structure(F, self.A.prec, self.V.prec, r.l_prec, r.r_prec))


def a_apn_residuals(S: AAPNStructure) -> dict:
    F = S.A.field
    n, m = S.A.dim, S.V.dim
    x, a, b = basis_vars(F, [n, m, m])

    def op(c):
        return lambda p, q: prod(F, c, p, q)

    def f(fam):
        return lambda s, w: act(F, fam, s, w)

    sc, pr, o = op(S.V.succ), op(S.V.prec), op(S.V.circ)
    r = S.rep
    ls, rs, lp, rp, lc, rc = (f(r.l_succ), f(r.r_succ), f(r.l_prec), f(r.r_prec),
                              f(r.l_circ), f(r.r_circ))
    return {
        "RRa.1": sc(lc(x, a) - rc(x, a), b) - sc(a, ls(x, b)) + ls(x, sc(a, b)),
        "RRa.2": lp(x, o(a, b)) - pr(rs(x, a), b) + pr(lp(x, a), b) + sc(a, lp(x, b)),
        "RRa.3": sc(lc(x, a), b) + pr(ls(x, b), a),
        "RRa.4": pr(lp(x, a), b) - pr(lp(x, b), a),
        "RRa.5": pr(lc(x, a) - rc(x, a), b) - ls(x, o(a, b)) + sc(a, lc(x, b)),
        "RRa.6": rs(x, o(a, b) - o(b, a)) - sc(b, rs(x, a)) + sc(a, rs(x, b)),
        "RRa.7": pr(a, rc(x, b)) - rp(x, sc(b, a) - pr(a, b)) + sc(b, rp(x, a)),
        "RRa.8": rp(x, o(a, b) - o(b, a)) - sc(a, rc(x, b)) + sc(b, rc(x, a)),
        "RRa.9": pr(a, lc(x, b)) - pr(ls(x, a), b) + pr(rp(x, a), b) + ls(x, pr(a, b)),
        "RRa.10": rs(x, o(a, b)) + pr(rs(x, a), b),
        "RRa.11": rp(x, pr(a, b)) - pr(rp(x, a), b),
        "RRa.12": rp(x, sc(a, b)) + sc(rc(x, a), b),
    }


def check_a_apn_algebra(S: AAPNStructure) -> IdentityReport:
    out = IdentityReport(S.A.field)
    out.extend(check_apn(S.V), "V:")
    out.extend(check_apn_rep(S.A, S.rep))
    shape = (S.A.dim, S.V.dim, S.V.dim)
    for tag, res in a_apn_residuals(S).items():
        out.add(tag, res, shape)
    return out


def check_relative_rb(S: AAPNStructure, T, weight) -> IdentityReport:
    return check_o_operator_apn(S.A, S.rep, T, weight, S.V)


check_strong_anti_o = check_strong
induced_apn_from_anti_o = induced_apn
compatible_apn_from_invertible_anti_o = compatible_apn_from_anti_o
