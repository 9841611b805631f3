"""Doubles, factorizable structures and the Rota-Baxter correspondence."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import APNAlgebra, NovikovAlgebra, check_novikov
from ..exactlin import Field, block, invert
from ..forms import (apn_from_quasi_frobenius, check_quadratic_apn,
                     check_quasi_frobenius, dual_apn_matched_pair, omega_sharp)
from ..matched_pair import build_apn_sum
from ..multilinear import act, apply, basis_vars, prod
from ..operators import (AAPNStructure, check_o_operator_novikov, check_relative_rb,
                         check_rota_baxter_apn, check_rota_baxter_novikov)
from ..report import IdentityReport
from ..representation import NovikovRep, coregular_apn_rep, dual, semidirect_apn
from .coalgebra import Cobracket, check_apn_bialgebra, dualize_cobracket
from .ybe import (T_from_s, as_tensor2, check_factorizable, check_invariant,
                  coboundary_delta, s_from_T)


@dataclass(frozen=True, eq=False)
class Double:
    algebra: APNAlgebra     # D = A (+) A*
    n: int
    s: np.ndarray           # sum e_i (x) e_i*
    delta: Cobracket        # coboundary of s on D


def double_algebra(A: APNAlgebra, delta: Cobracket) -> APNAlgebra:
    """A (+) A* with both algebras acting on each other coregularly."""
    return build_apn_sum(dual_apn_matched_pair(A, dualize_cobracket(delta)))


def canonical_s(field: Field, n: int) -> np.ndarray:
    s = field.zeros((2 * n, 2 * n))
    for i in range(n):
        s[i, n + i] = field.scalar(1)
    return s


def double_bialgebra(A: APNAlgebra, delta: Cobracket, check: bool = True) -> Double:
    if check:
        rep = check_apn_bialgebra(A, delta)
        if not rep.passed:
            raise ValueError(f"not an APN bialgebra: {rep.failed_identities()}")
    D = double_algebra(A, delta)
    s = canonical_s(A.field, A.dim)
    return Double(D, A.dim, s, coboundary_delta(D, s, s))


# ---------------------------------------------------------------- factorization


def _require_factorizable(A: APNAlgebra, s) -> np.ndarray:
    F = A.field
    s = as_tensor2(F, s, A.dim)
    rep = check_factorizable(A, s)
    if not rep.passed:
        raise ValueError(f"not factorizable: {rep.failed_identities()}")
    return s


def factorize(A: APNAlgebra, s, x, check: bool = True):
    """x = x1 - x2 with x1 in Im T_s and x2 in Im T_tau(s)."""
    F = A.field
    s = _require_factorizable(A, s) if check else as_tensor2(F, s, A.dim)
    Ti = invert(F, T_from_s(F, s + s.T))
    if Ti is None:
        raise ValueError("T_{s+tau(s)} is not invertible")
    z = F.reduce(Ti @ F.array(x))
    x1 = F.reduce(T_from_s(F, s) @ z)
    x2 = F.reduce(-(T_from_s(F, s.T) @ z))
    return x1, x2


def phi_iso(A: APNAlgebra, s, check: bool = True) -> np.ndarray:
    """phi(x, z) = (x + T_s z, x - T_tau(s) z) as a (2n x 2n) matrix."""
    F = A.field
    s = _require_factorizable(A, s) if check else as_tensor2(F, s, A.dim)
    I = F.eye(A.dim)
    return block(F, [[I, T_from_s(F, s)], [I, F.reduce(-T_from_s(F, s.T))]])


def direct_sum(A: APNAlgebra, B: APNAlgebra) -> APNAlgebra:
    F = A.field
    n, m = A.dim, B.dim

    def ds(a, b):
        c = F.zeros((n + m,) * 3)
        c[:n, :n, :n] = a
        c[n:, n:, n:] = b
        return c
    return APNAlgebra(F, ds(A.succ, B.succ), ds(A.prec, B.prec))


def check_homomorphism(src: APNAlgebra, dst: APNAlgebra, M) -> IdentityReport:
    """M(u * v) = M(u) * M(v) for both operations on basis pairs of src."""
    F = src.field
    M = F.reduce(np.asarray(M))
    u, v = basis_vars(F, [src.dim, src.dim])
    Mu, Mv = apply(F, M, u), apply(F, M, v)
    out = IdentityReport(F)
    for tag, a, b in (("hom.succ", src.succ, dst.succ), ("hom.prec", src.prec, dst.prec)):
        out.add(tag, apply(F, M, prod(F, a, u, v)) - prod(F, b, Mu, Mv), (src.dim, src.dim))
    return out


def check_phi_iso(A: APNAlgebra, s) -> IdentityReport:
    """phi from the double of (A, Delta_s) to A (+) A is an invertible homomorphism."""
    F = A.field
    s = _require_factorizable(A, s)
    phi = phi_iso(A, s, check=False)
    D = double_algebra(A, coboundary_delta(A, s, s))
    out = check_homomorphism(D, direct_sum(A, A), phi)
    return out.add_flag("phi invertible", invert(F, phi) is not None)


# ---------------------------------------------------------------- RB correspondence


def check_fs(field: Field, P, w, weight, tag: str = "Fs") -> IdentityReport:
    """w(P x, y) + w(x, P y) + weight w(x, y) = 0."""
    P, w = field.reduce(np.asarray(P)), field.reduce(np.asarray(w))
    lam = field.scalar(weight)
    return IdentityReport(field).add(tag, (P.T @ w + w @ P + lam * w)[..., None], w.shape)


def check_quadratic_rb(A: APNAlgebra, P, w, weight) -> IdentityReport:
    F = A.field
    out = IdentityReport(F)
    out.extend(check_rota_baxter_apn(A, P, weight))
    out.extend(check_quadratic_apn(A, w))
    return out.extend(check_fs(F, P, w, weight))


def check_symmetric_rb_qf(N: NovikovAlgebra, P, w, weight) -> IdentityReport:
    F = N.field
    out = IdentityReport(F)
    out.extend(check_novikov(N))
    out.extend(check_rota_baxter_novikov(N, P, weight))
    out.extend(check_quasi_frobenius(N, w))
    return out.extend(check_fs(F, P, w, weight, "Fs1"))


def fb0_transfer(N: NovikovAlgebra, P, w, weight) -> tuple[bool, bool]:
    """(Novikov-level pass, APN-level pass for the compatible structure)."""
    nov = check_symmetric_rb_qf(N, P, w, weight).passed
    if not nov:
        return False, False
    A = apn_from_quasi_frobenius(N, w)
    return True, check_quadratic_rb(A, P, w, weight).passed


def rb_to_factorizable(A: APNAlgebra, P, w, weight) -> np.ndarray:
    """s with T_s = P (w#)^{-1}."""
    F = A.field
    if F.is_zero_scalar(F.scalar(weight)):
        raise ValueError("the factorizable correspondence needs a nonzero weight")
    inv = invert(F, omega_sharp(F, w))
    if inv is None:
        raise ValueError("degenerate form")
    return s_from_T(F, F.reduce(F.array(P) @ inv))


def factorizable_to_rb(A: APNAlgebra, s, weight, check: bool = True):
    """P = T_s w# with w# = -weight T_{s+tau(s)}^{-1}; returns (P, w)."""
    F = A.field
    s = _require_factorizable(A, s) if check else as_tensor2(F, s, A.dim)
    lam = F.scalar(weight)
    if F.is_zero_scalar(lam):
        raise ValueError("the factorizable correspondence needs a nonzero weight")
    Ti = invert(F, T_from_s(F, s + s.T))
    sharp = F.reduce(-lam * Ti)
    P = F.reduce(T_from_s(F, s) @ sharp)
    return P, F.reduce(sharp.T)


def semidirect_rb_quadratic(A: APNAlgebra, P, weight):
    """(A ⋉ A*, canonical form, P (+) -(P^T + weight I)) and the explicit s."""
    F = A.field
    n = A.dim
    P = F.array(P)
    lam = F.scalar(weight)
    D = semidirect_apn(A, coregular_apn_rep(A))
    w = block(F, [[None, F.eye(n)], [F.eye(n), None]])
    Phat = block(F, [[P, None], [None, F.reduce(-(P.T + lam * F.eye(n)))]])
    # s = sum_i e_i* (x) P(e_i) - (P + weight I)(e_i) (x) e_i*
    s = F.zeros((2 * n, 2 * n))
    s[n:, :n] = P.T
    s[:n, n:] = F.reduce(-(P + lam * F.eye(n)))
    return D, w, Phat, F.reduce(s)


# ---------------------------------------------------------------- A-APN structures from s


def ad_structure(A: APNAlgebra, s) -> AAPNStructure:
    """(A*, >=_s, <=_s) with the coregular action, for symmetric invariant s."""
    F = A.field
    n = A.dim
    Ts = T_from_s(F, as_tensor2(F, s, n))
    z, e = basis_vars(F, [n, n])
    tz = apply(F, Ts, z)
    succ = -act(F, dual(A.L_star), tz, e)
    prec = act(F, dual(A.R_odot), tz, e)
    return AAPNStructure(A, coregular_apn_rep(A), APNAlgebra(F, succ, prec))


def ad_alternative_forms(A: APNAlgebra, s) -> IdentityReport:
    """The second expressions of the two products agree with the first."""
    F = A.field
    n = A.dim
    Ts = T_from_s(F, as_tensor2(F, s, n))
    z, e = basis_vars(F, [n, n])
    tz, te = apply(F, Ts, z), apply(F, Ts, e)
    out = IdentityReport(F)
    out.add("AD1", act(F, dual(A.L_star), tz, e) - act(F, dual(A.R_succ), te, z), (n, n))
    out.add("AD2", act(F, dual(A.R_odot), tz, e) - act(F, dual(A.R_circ), te, z), (n, n))
    out.add("AD3", act(F, dual(A.L_odot), tz, e) + act(F, dual(A.R_prec), te, z), (n, n))
    return out


def ad_circ(A: APNAlgebra, s) -> np.ndarray:
    F = A.field
    n = A.dim
    Ts = T_from_s(F, as_tensor2(F, s, n))
    z, e = basis_vars(F, [n, n])
    return F.reduce(-act(F, dual(A.L_odot), apply(F, Ts, z), e))


def relative_rb_equivalences(A: APNAlgebra, s) -> dict:
    """Quasi-triangularity against the two weight -1 relative RB laws of T_s."""
    from .ybe import is_solution
    F = A.field
    s = as_tensor2(F, s, A.dim)
    sym = F.reduce(s + s.T)
    if not check_invariant(A, sym).passed:
        raise ValueError("s + tau(s) is not invariant")
    Ts = T_from_s(F, s)
    S = ad_structure(A, sym)
    nrep = NovikovRep(F, -dual(A.L_odot), dual(A.R_prec))
    return {
        "quasi_triangular": is_solution(A, s),
        "relative_rb_apn": check_relative_rb(S, Ts, -1).passed,
        "relative_rb_novikov": check_o_operator_novikov(A.associated(), nrep, Ts, -1,
                                                        ad_circ(A, sym)).passed,
    }
