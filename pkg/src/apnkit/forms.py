"""Bilinear forms: quasi-Frobenius Novikov algebras, quadratic APN algebras
and double constructions.

A form is the matrix w[i, j] = w(e_i, e_j). With the positional dual basis
w#(x) = w(x, -) has matrix w^T, which equals w for symmetric forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import APNAlgebra, NovikovAlgebra
from .exactlin import Field, block, contract, det, invert
from .matched_pair import (APNMatchedPair, NovikovMatchedPair, build_apn_sum,
                           build_novikov_sum, check_apn_matched_pair,
                           check_novikov_matched_pair)
from .multilinear import apply, basis_vars, prod
from .report import IdentityReport
from .representation import APNRep, NovikovRep, dual


def _form(field: Field, w, n: int) -> np.ndarray:
    w = field.reduce(np.asarray(w))
    if w.shape != (n, n):
        raise ValueError(f"form must be {n} x {n}, got {w.shape}")
    return w


def pair(field: Field, w: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return contract(field, "...i,ij,...j->...", x, w, y)


def check_form_basics(field: Field, w: np.ndarray, report: IdentityReport) -> IdentityReport:
    report.add("symmetric", w - w.T, w.shape)
    d = det(field, w)
    report.add_flag("nondegenerate", not field.is_zero_scalar(d), (d,))
    return report


def omega_sharp(field: Field, w) -> np.ndarray:
    """Matrix of x -> w(x, -) from A to A*."""
    return field.reduce(np.asarray(w)).T.copy()


def s_omega(field: Field, w) -> np.ndarray:
    """The 2-tensor whose T_s is the inverse of w#."""
    inv = invert(field, omega_sharp(field, w))
    if inv is None:
        raise ValueError("degenerate form")
    return inv.T.copy()


def check_quasi_frobenius(N: NovikovAlgebra, w) -> IdentityReport:
    F = N.field
    w = _form(F, w, N.dim)
    out = check_form_basics(F, w, IdentityReport(F))
    x, y, z = basis_vars(F, [N.dim] * 3)

    def o(a, b):
        return prod(F, N.op, a, b)

    res = pair(F, w, o(x, y), z) - pair(F, w, o(x, z) + o(z, x), y) + pair(F, w, o(z, y), x)
    return out.add("Qn", res, (N.dim,) * 3)


def check_quadratic_apn(A: APNAlgebra, w) -> IdentityReport:
    F = A.field
    w = _form(F, w, A.dim)
    out = check_form_basics(F, w, IdentityReport(F))
    x, y, z = basis_vars(F, [A.dim] * 3)

    def m(c):
        return lambda a, b: prod(F, c, a, b)

    sc, pr, o = m(A.succ), m(A.prec), m(A.circ)
    out.add("C2a", pair(F, w, pr(x, y), z) + pair(F, w, x, o(z, y)), (A.dim,) * 3)
    out.add("C2b", pair(F, w, sc(x, y), z) - pair(F, w, o(x, z) + o(z, x), y), (A.dim,) * 3)
    return out


def apn_from_quasi_frobenius(N: NovikovAlgebra, w) -> APNAlgebra:
    """Solve the invariance laws for the two operations, one basis pair at a time."""
    F = N.field
    w = _form(F, w, N.dim)
    solver = invert(F, w.T)
    if solver is None:
        raise ValueError("degenerate form")
    x, y, z = basis_vars(F, [N.dim] * 3)

    def o(a, b):
        return prod(F, N.op, a, b)

    # b[x, y, z] = w(x > y, z); then (x > y) = (w^T)^{-1} b[x, y, :]
    b_succ = pair(F, w, o(x, z) + o(z, x), y)
    b_prec = -pair(F, w, x, o(z, y))
    return APNAlgebra(F, apply(F, solver, b_succ), apply(F, solver, b_prec))


def canonical_form(field: Field, n: int) -> np.ndarray:
    """w(x + a, y + b) = <x, b> + <a, y> on A (+) A*."""
    I = field.eye(n)
    return block(field, [[None, I], [I, None]])


# ---------------------------------------------------------------- doubles


@dataclass(frozen=True, eq=False)
class DoubleConstruction:
    algebra: NovikovAlgebra
    n: int
    omega: np.ndarray


def dual_novikov_matched_pair(A: APNAlgebra, Astar: APNAlgebra) -> NovikovMatchedPair:
    """(A, A*, -L_odot*, R_prec*, -L_odot'*, R'_prec*) for APN structures on A and A*."""
    F = A.field
    return NovikovMatchedPair(
        A.associated(), Astar.associated(),
        NovikovRep(F, -dual(A.L_odot), dual(A.R_prec)),
        NovikovRep(F, -dual(Astar.L_odot), dual(Astar.R_prec)))


def dual_apn_matched_pair(A: APNAlgebra, Astar: APNAlgebra) -> APNMatchedPair:
    """Both algebras acting on each other by their coregular representations."""
    F = A.field

    def coreg(B):
        return APNRep(F, -dual(B.L_star), -dual(B.R_succ), dual(B.R_odot), dual(B.R_circ))

    return APNMatchedPair(A, Astar, coreg(A), coreg(Astar))


def build_double_construction(mp: NovikovMatchedPair) -> DoubleConstruction:
    if not check_novikov_matched_pair(mp).passed:
        raise ValueError("not a matched pair of Novikov algebras")
    if mp.A.dim != mp.B.dim:
        raise ValueError("the second algebra must live on the dual space")
    D = build_novikov_sum(mp)
    return DoubleConstruction(D, mp.A.dim, canonical_form(mp.A.field, mp.A.dim))


def mp1_equivalences(A: APNAlgebra, Astar: APNAlgebra) -> dict:
    """Evaluate the three equivalent conditions for a pair of APN structures on A, A*."""
    F = A.field
    n = A.dim
    nmp = dual_novikov_matched_pair(A, Astar)
    amp = dual_apn_matched_pair(A, Astar)
    c = check_novikov_matched_pair(nmp).passed
    b = check_apn_matched_pair(amp).passed
    D = build_novikov_sum(nmp)
    w = canonical_form(F, n)
    a = check_novikov_algebra_and_qf(D, w)
    if a:
        C = apn_from_quasi_frobenius(D, w)
        a = (F.equal(C.succ[:n, :n, :n], A.succ) and F.equal(C.prec[:n, :n, :n], A.prec)
             and F.equal(C.succ[n:, n:, n:], Astar.succ) and F.equal(C.prec[n:, n:, n:], Astar.prec)
             and F.is_zero(C.succ[:n, :n, n:]) and F.is_zero(C.prec[:n, :n, n:])
             and F.is_zero(C.succ[n:, n:, :n]) and F.is_zero(C.prec[n:, n:, :n]))
    return {"double_construction": a, "apn_matched_pair": b, "novikov_matched_pair": c}


def check_novikov_algebra_and_qf(N: NovikovAlgebra, w) -> bool:
    from .algebra import check_novikov
    return check_novikov(N).passed and check_quasi_frobenius(N, w).passed


def double_apn_from_pair(A: APNAlgebra, Astar: APNAlgebra) -> APNAlgebra:
    return build_apn_sum(dual_apn_matched_pair(A, Astar))
