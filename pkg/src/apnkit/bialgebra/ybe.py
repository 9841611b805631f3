"""Two-tensors, placement products and the APN Yang-Baxter equation.

A 2-tensor s = sum s[p, q] e_p (x) e_q is a square matrix. The map
T_s: A* -> A with <T_s(z), w> = <s, z (x) w> sends e_p* to sum_q s[p, q] e_q,
so as a matrix acting on coordinate columns it is s^T.
"""

from __future__ import annotations

import re

import numpy as np

from ..algebra import APNAlgebra
from ..exactlin import S12, S13, S23, S132, Field, contract, invert, permute3
from ..multilinear import act, apply, basis_vars, op_at, prod
from ..operators import check_o_operator_apn, check_o_operator_novikov
from ..report import IdentityReport
from ..representation import (APNRep, NovikovRep, coregular_apn_rep, dual,
                              dual_apn_rep, semidirect_apn)
from .coalgebra import Cobracket, left, right

PLACEMENTS = ("12*13", "13*12", "12*23", "13*23", "21*13", "13*21", "21*31", "21*23",
              "21*32", "31*23", "31*21", "31*32", "23*12", "23*21", "23*13", "32*21", "23*31")


def as_tensor2(field: Field, s, n: int | None = None) -> np.ndarray:
    s = field.reduce(np.asarray(s))
    if s.ndim != 2 or s.shape[0] != s.shape[1] or (n is not None and s.shape[0] != n):
        raise ValueError(f"2-tensor must be a square matrix of size {n}, got {s.shape}")
    return s


def tau_s(s: np.ndarray) -> np.ndarray:
    return s.T.copy()


def T_from_s(field: Field, s) -> np.ndarray:
    return field.reduce(np.asarray(s)).T.copy()


def s_from_T(field: Field, T) -> np.ndarray:
    return field.reduce(np.asarray(T)).T.copy()


# ---------------------------------------------------------------- placements


def _parse_placement(symbol: str):
    m = re.fullmatch(r"\s*s?_?\{?([123])([123])\}?\s*\*\s*s?_?\{?([123])([123])\}?'?\s*", symbol)
    if not m:
        raise ValueError(f"unknown placement {symbol!r}")
    I, J, K, L = (int(g) - 1 for g in m.groups())
    if I == J or K == L:
        raise ValueError(f"placement {symbol!r} repeats a leg")
    shared = {I, J} & {K, L}
    if len(shared) != 1 or len({I, J, K, L}) != 3:
        raise ValueError(f"placement {symbol!r} must share exactly one leg")
    return I, J, K, L, shared.pop()


def placement_product(field: Field, s, s2, c: np.ndarray, placement: str) -> np.ndarray:
    """s_{IJ} * s'_{KL}: the legs of s go to I, J and those of s' to K, L; the
    common leg carries (element of s) * (element of s').

    The seventeen tabulated placements are in PLACEMENTS; any other pattern
    following the same rule (such as 32*31) is accepted as well.
    """
    I, J, K, L, m = _parse_placement(placement)
    s, s2 = np.asarray(s), np.asarray(s2)
    lab_s = {I: "p", J: "q"}
    lab_t = {K: "r", L: "t"}
    out = []
    for leg in range(3):
        if leg == m:
            out.append("w")
        else:
            out.append(lab_s.get(leg) or lab_t.get(leg))
    spec = f"pq,rt,{lab_s[m]}{lab_t[m]}w->{''.join(out)}"
    return contract(field, spec, s, s2, c)


def _pp(A: APNAlgebra, s):
    F = A.field
    ops = {"succ": A.succ, "prec": A.prec, "circ": A.circ, "odot": A.odot, "star": A.star}

    def f(placement, op):
        return placement_product(F, s, s, ops[op], placement)
    return f


# ---------------------------------------------------------------- the APN-YBE


def ybe_residual(A: APNAlgebra, s) -> np.ndarray:
    """s12 o s13 + s23 (.) s13 + s12 < s23."""
    s = as_tensor2(A.field, s, A.dim)
    f = _pp(A, s)
    return A.field.reduce(f("12*13", "circ") + f("23*13", "odot") + f("12*23", "prec"))


def ybe_companions(A: APNAlgebra, s) -> dict:
    """P(s), P1..P5 and P(tau s) as 3-tensors."""
    s = as_tensor2(A.field, s, A.dim)
    f = _pp(A, s)
    F = A.field
    return {
        "P": ybe_residual(A, s),
        "P1": F.reduce(f("12*13", "prec") - f("13*23", "odot") + f("12*23", "circ")),
        "P2": F.reduce(f("12*13", "succ") + f("13*23", "star") - f("12*23", "succ")),
        "P3": F.reduce(f("13*23", "circ") - f("13*12", "prec") - f("12*23", "odot")),
        "P4": F.reduce(f("13*12", "circ") - f("13*23", "prec") - f("23*12", "odot")),
        "P5": F.reduce(f("12*23", "star") - f("13*12", "succ") - f("13*23", "succ")),
        "P_tau": F.reduce(f("21*31", "circ") + f("21*32", "prec") + f("32*31", "odot")),
    }


def is_solution(A: APNAlgebra, s) -> bool:
    return A.field.is_zero(ybe_residual(A, s))


def ye80_operator_residuals(A: APNAlgebra, s) -> dict:
    """The operator forms of P, P1..P5 evaluated on pairs of dual basis vectors.

    Each entry is a residual of shape (n, n, n): slice [i, j] is the vector
    identity at (zeta, eta) = (e_i*, e_j*).
    """
    F = A.field
    n = A.dim
    s = as_tensor2(F, s, n)
    Ts, Tt = T_from_s(F, s), T_from_s(F, tau_s(s))
    z, e = basis_vars(F, [n, n])
    tsz, ttz, tse, tte = apply(F, Ts, z), apply(F, Tt, z), apply(F, Ts, e), apply(F, Tt, e)

    def m(c):
        return lambda a, b: prod(F, c, a, b)

    def d(fam):
        return lambda x, v: act(F, dual(fam), x, v)

    o, pr, sc = m(A.circ), m(A.prec), m(A.succ)
    Lod, Rp, Rc, Rod, Lst, Rs = (d(A.L_odot), d(A.R_prec), d(A.R_circ), d(A.R_odot),
                                 d(A.L_star), d(A.R_succ))
    ap_t = lambda v: apply(F, Tt, v)  # noqa: E731
    ap_s = lambda v: apply(F, Ts, v)  # noqa: E731
    return {
        "P": o(ttz, tte) - ap_t(Lod(tsz, e) + Rp(tte, z)),
        "P1": pr(ttz, tte) - ap_t(Rc(tte, z) - Rod(tsz, e)),
        "P2": sc(ttz, tte) - ap_t(Lst(tsz, e) - Rs(tte, z)),
        "P3": o(tsz, tse) - ap_s(-Lod(tsz, e) - Rp(tte, z)),
        "P4": pr(tsz, tse) - ap_s(Rod(tsz, e) - Rc(tte, z)),
        "P5": sc(tsz, tse) - ap_s(Rs(tte, z) - Lst(tsz, e)),
    }


def s_tensors(A: APNAlgebra, s) -> dict:
    """S1..S7 for the case s_succ = s_prec = s."""
    s = as_tensor2(A.field, s, A.dim)
    f = _pp(A, s)
    F = A.field
    return {
        "S1": F.reduce(f("12*23", "prec") + f("23*13", "odot") + f("12*13", "circ")),
        "S2": F.reduce(f("12*23", "succ") - f("13*23", "star") - f("12*13", "succ")),
        "S3": F.reduce(f("12*23", "odot") + f("13*12", "prec") - f("13*23", "circ")
                       + f("23*12", "prec") + f("12*13", "odot") + f("23*13", "circ")),
        "S4": F.reduce(f("23*12", "odot") - f("13*12", "circ") - f("13*12", "star")
                       - f("23*13", "succ") + f("13*23", "prec") + f("23*12", "succ")),
        "S5": F.reduce(f("13*12", "prec") + f("12*23", "odot") - f("13*23", "circ")),
        "S6": F.reduce(f("23*12", "odot") + f("13*23", "prec") - f("13*12", "circ")),
        "S7": F.reduce(f("12*13", "prec") - f("13*23", "odot") + f("12*23", "circ")),
    }


def check_s_relations(A: APNAlgebra, s, printed: bool = False) -> IdentityReport:
    """The six relations among S1..S7 that hold when s is skew-symmetric.

    S5 is minus the cyclic shift x(x)y(x)z -> y(x)z(x)x of S1. With
    printed=True the opposite cycle z(x)x(x)y is used instead, which fails
    in general; it is kept so the discrepancy stays reproducible.
    """
    F = A.field
    S = s_tensors(A, s)
    S1 = S["S1"]
    out = IdentityReport(F)
    shape = (A.dim,) * 3
    cyc = S132 if printed else S132.inverse()
    out.add("S2=-S1-s12.S1", S["S2"] + S1 + permute3(S1, S12), shape)
    out.add("S3=S5+s13.S1", S["S3"] - S["S5"] - permute3(S1, S13), shape)
    out.add("S4=-S1-2s23.S1", S["S4"] + S1 + 2 * permute3(S1, S23), shape)
    out.add("S6=-s23.S1", S["S6"] + permute3(S1, S23), shape)
    out.add("S5=-cyc.S1", S["S5"] + permute3(S1, cyc), shape)
    out.add("S7=-s12.S1", S["S7"] + permute3(S1, S12), shape)
    return out


def _leg(field: Field, M: np.ndarray, t: np.ndarray, k: int) -> np.ndarray:
    """Apply a (stack of) matrices to leg k of a 3-tensor."""
    spec = {0: "...ab,bcd->...acd", 1: "...ab,cbd->...cad", 2: "...ab,cdb->...cda"}[k]
    return contract(field, spec, M, t)


def db4_residuals(A: APNAlgebra, s) -> dict:
    """The five conditions that remain of the coboundary bialgebra laws when
    s_succ = s_prec = s is skew-symmetric, one per basis vector x."""
    F = A.field
    n = A.dim
    S = s_tensors(A, s)
    (x,) = basis_vars(F, [n])

    def at(fam):
        return op_at(F, fam, x)

    Ls, Lst, Lc, Lod = at(A.L_succ), at(A.L_star), at(A.L_circ), at(A.L_odot)
    g = lambda M, t, k: _leg(F, M, t, k)  # noqa: E731
    return {
        "CB3": g(Ls, S["S2"], 0) - g(Ls, S["S2"], 1) + g(Lst, S["S3"], 2),
        "CB4": g(Lc, S["S1"], 0) + g(Ls, S["S1"], 1) + g(Lod, S["S4"], 2),
        "CB5": g(Lst, S["S5"], 2) - g(Lod, S["S2"], 1),
        "CB6": g(Lod, S["S6"], 2) + g(Lod, S["S1"], 1),
        "CB7": g(Ls, S["S1"], 0) - g(Lod, S["S3"], 2) + g(Ls, S["S7"], 1),
    }


def check_db4(A: APNAlgebra, s) -> IdentityReport:
    out = IdentityReport(A.field)
    for tag, res in db4_residuals(A, s).items():
        out.add(tag, res, (A.dim,))
    return out


# ---------------------------------------------------------------- coboundaries


def coboundary_delta(A: APNAlgebra, s_succ, s_prec=None) -> Cobracket:
    """Delta_succ(x) = (I (x) L_star(x) - L_succ(x) (x) I) s_succ,
    Delta_prec(x) = (L_circ(x) (x) I - I (x) L_odot(x)) s_prec."""
    F = A.field
    n = A.dim
    ss = as_tensor2(F, s_succ, n)
    sp = ss if s_prec is None else as_tensor2(F, s_prec, n)
    (x,) = basis_vars(F, [n])
    d_succ = right(F, op_at(F, A.L_star, x), ss) - left(F, op_at(F, A.L_succ, x), ss)
    d_prec = left(F, op_at(F, A.L_circ, x), sp) - right(F, op_at(F, A.L_odot, x), sp)
    return Cobracket(F, d_succ, d_prec)


def invariance_residuals(A: APNAlgebra, s) -> dict:
    d = coboundary_delta(A, s, s)
    return {"IE3": d.d_succ, "IE4": d.d_prec}


def check_invariant(A: APNAlgebra, s) -> IdentityReport:
    out = IdentityReport(A.field)
    for tag, res in invariance_residuals(A, s).items():
        out.add(tag, res, (A.dim,))
    return out


def check_invariant_operator_form(A: APNAlgebra, s) -> IdentityReport:
    """The same condition written with T_s: L_star(x) T_s + T_s L_succ*(x) = 0 and
    L_odot(x) T_s + T_s L_circ*(x) = 0."""
    F = A.field
    n = A.dim
    Ts = T_from_s(F, as_tensor2(F, s, n))
    (x,) = basis_vars(F, [n])

    def at(fam):
        return op_at(F, fam, x)

    out = IdentityReport(F)
    out.add("IE5", at(A.L_star) @ Ts + Ts @ at(dual(A.L_succ)), (n,))
    out.add("IE6", at(A.L_odot) @ Ts + Ts @ at(dual(A.L_circ)), (n,))
    return out


def dual_products_from_s(A: APNAlgebra, s) -> APNAlgebra:
    """The APN structure on A* dual to the coboundary cobracket of s, written
    with T_s and T_tau(s) only."""
    F = A.field
    n = A.dim
    s = as_tensor2(F, s, n)
    Ts, Tt = T_from_s(F, s), T_from_s(F, tau_s(s))
    z, e = basis_vars(F, [n, n])
    tsz, tte = apply(F, Ts, z), apply(F, Tt, e)
    succ = act(F, dual(A.R_succ), tte, z) - act(F, dual(A.L_star), tsz, e)
    prec = act(F, dual(A.R_odot), tsz, e) - act(F, dual(A.R_circ), tte, z)
    return APNAlgebra(F, succ, prec)


def dual_circ_from_s(A: APNAlgebra, s) -> np.ndarray:
    F = A.field
    n = A.dim
    s = as_tensor2(F, s, n)
    Ts, Tt = T_from_s(F, s), T_from_s(F, tau_s(s))
    z, e = basis_vars(F, [n, n])
    return F.reduce(-act(F, dual(A.R_prec), apply(F, Tt, e), z)
                    - act(F, dual(A.L_odot), apply(F, Ts, z), e))


# ---------------------------------------------------------------- structures


def check_quasi_triangular(A: APNAlgebra, s) -> IdentityReport:
    F = A.field
    s = as_tensor2(F, s, A.dim)
    out = IdentityReport(F)
    out.add("YE6", ybe_residual(A, s)[..., None], (A.dim,) * 3)
    return out.extend(check_invariant(A, F.reduce(s + s.T)), "s+tau(s):")


def check_triangular(A: APNAlgebra, s) -> IdentityReport:
    F = A.field
    s = as_tensor2(F, s, A.dim)
    out = check_quasi_triangular(A, s)
    return out.add("skew", (s + s.T)[..., None], (A.dim,) * 2)


def check_factorizable(A: APNAlgebra, s) -> IdentityReport:
    F = A.field
    s = as_tensor2(F, s, A.dim)
    out = check_quasi_triangular(A, s)
    ok = invert(F, T_from_s(F, s + s.T)) is not None
    return out.add_flag("T_{s+tau(s)} invertible", ok)


def ye8_three_way(A: APNAlgebra, s) -> dict:
    """For skew s: the YBE, the Novikov O-operator law and the APN O-operator law."""
    F = A.field
    s = as_tensor2(F, s, A.dim)
    if not F.is_zero(s + s.T):
        raise ValueError("the three-way equivalence is stated for skew-symmetric s")
    Ts = T_from_s(F, s)
    nrep = NovikovRep(F, -dual(A.L_odot), dual(A.R_prec))
    return {
        "ybe": is_solution(A, s),
        "novikov_o_operator": check_o_operator_novikov(A.associated(), nrep, Ts).passed,
        "apn_o_operator": check_o_operator_apn(A, coregular_apn_rep(A), Ts).passed,
    }


def theorem_ya1_equivalences(A: APNAlgebra, s) -> dict:
    """The five conditions equivalent when s + tau(s) is invariant."""
    F = A.field
    s = as_tensor2(F, s, A.dim)
    if not check_invariant(A, F.reduce(s + s.T)).passed:
        raise ValueError("s + tau(s) is not invariant")
    P = {k: F.is_zero(v) for k, v in ybe_companions(A, s).items()}
    conds = {
        "a": P["P"],
        "b": P["P3"],
        "c": P["P1"] and P["P2"],
        "d": P["P4"] and P["P5"],
        "e": P["P_tau"],
    }
    return {"conditions": conds, "residual_zero": P, "consistent": len(set(conds.values())) == 1}


def homomorphism_report(A: APNAlgebra, s) -> IdentityReport:
    """T_s and -T_tau(s) from (A*, >_s, <_s) and (A*, o_s) to A."""
    F = A.field
    n = A.dim
    s = as_tensor2(F, s, n)
    S = dual_products_from_s(A, s)
    z, e = basis_vars(F, [n, n])
    out = IdentityReport(F)
    for name, T in (("T_s", T_from_s(F, s)), ("-T_tau(s)", F.reduce(-T_from_s(F, s.T)))):
        tz, te = apply(F, T, z), apply(F, T, e)
        for tag, cs, ca in (("succ", S.succ, A.succ), ("prec", S.prec, A.prec),
                            ("circ", S.circ, A.circ)):
            out.add(f"{name}:{tag}", apply(F, T, prod(F, cs, z, e)) - prod(F, ca, tz, te), (n, n))
    return out


def semidirect_ybe_solution(A: APNAlgebra, rep: APNRep, T) -> tuple[APNAlgebra, np.ndarray]:
    """A ⋉ V* with the dual representation and s = T - tau(T)."""
    F = A.field
    n, m = A.dim, rep.dim
    T = F.reduce(np.asarray(T))
    if T.shape != (n, m):
        raise ValueError(f"T must be {n} x {m}")
    hat = semidirect_apn(A, dual_apn_rep(rep))
    s = F.zeros((n + m, n + m))
    # T = sum_i T(v_i) (x) v_i*
    s[:n, n:] = T
    s[n:, :n] -= T.T
    return hat, F.reduce(s)
