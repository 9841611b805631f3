"""Representations of Novikov and APN algebras, duals and semi-direct products.

A linear family f: A -> End(V) is a stack fam[i] = matrix of f(e_i).
The dual family uses <f*(x) u*, v> = -<u*, f(x) v>, i.e. f*(x) = -f(x)^T
with respect to the positional dual basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import APNAlgebra, NovikovAlgebra
from .exactlin import Field
from .multilinear import act, basis_vars, prod
from .report import IdentityReport


def dual(fam: np.ndarray) -> np.ndarray:
    return -fam.transpose(0, 2, 1)


def _family(field: Field, fam, name: str) -> np.ndarray:
    fam = field.reduce(np.asarray(fam))
    if fam.ndim != 3 or fam.shape[1] != fam.shape[2]:
        raise ValueError(f"{name} must be a stack of square matrices, got {fam.shape}")
    return fam


@dataclass(frozen=True, eq=False)
class NovikovRep:
    field: Field
    l: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        l = _family(self.field, self.l, "l")
        r = _family(self.field, self.r, "r")
        if l.shape != r.shape:
            raise ValueError("l and r must have the same shape")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "r", r)

    @property
    def dim(self) -> int:
        return self.l.shape[1]

    def __eq__(self, other):
        return (isinstance(other, NovikovRep) and self.field == other.field
                and self.field.equal(self.l, other.l) and self.field.equal(self.r, other.r))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class APNRep:
    field: Field
    l_succ: np.ndarray
    r_succ: np.ndarray
    l_prec: np.ndarray
    r_prec: np.ndarray

    def __post_init__(self):
        shapes = set()
        for name in ("l_succ", "r_succ", "l_prec", "r_prec"):
            fam = _family(self.field, getattr(self, name), name)
            object.__setattr__(self, name, fam)
            shapes.add(fam.shape)
        if len(shapes) != 1:
            raise ValueError(f"representation maps disagree in shape: {shapes}")

    @property
    def dim(self) -> int:
        return self.l_succ.shape[1]

    @property
    def l_circ(self):
        return self.field.reduce(self.l_succ + self.l_prec)

    @property
    def r_circ(self):
        return self.field.reduce(self.r_succ + self.r_prec)

    @property
    def l_star(self):
        return self.field.reduce(self.l_circ + self.r_circ)

    @property
    def l_odot(self):
        return self.field.reduce(self.l_succ + self.r_prec)

    @property
    def r_odot(self):
        return self.field.reduce(self.r_succ + self.l_prec)

    def maps(self):
        return (self.l_succ, self.r_succ, self.l_prec, self.r_prec)

    def __eq__(self, other):
        return (isinstance(other, APNRep) and self.field == other.field
                and all(self.field.equal(a, b) for a, b in zip(self.maps(), other.maps())))

    __hash__ = None


# ---------------------------------------------------------------- constructors


def regular_novikov_rep(N: NovikovAlgebra) -> NovikovRep:
    return NovikovRep(N.field, N.L, N.R)


def regular_apn_rep(A: APNAlgebra) -> APNRep:
    return APNRep(A.field, A.L_succ, A.R_succ, A.L_prec, A.R_prec)


regular_rep = regular_apn_rep


def dual_apn_rep(rep: APNRep) -> APNRep:
    """(V*, -l_star*, -r_succ*, r_odot*, r_circ*)."""
    F = rep.field
    return APNRep(F, -dual(rep.l_star), -dual(rep.r_succ), dual(rep.r_odot), dual(rep.r_circ))


def coregular_apn_rep(A: APNAlgebra) -> APNRep:
    return dual_apn_rep(regular_apn_rep(A))


def novikov_reps_from_apn_rep(rep: APNRep) -> dict:
    """The four Novikov representations of the associated algebra."""
    F = rep.field
    return {
        "neg": NovikovRep(F, -rep.l_succ, -rep.r_prec),
        "circ": NovikovRep(F, rep.l_circ, rep.r_circ),
        "dual_star": NovikovRep(F, dual(rep.l_star), -dual(rep.r_circ)),
        "dual_odot": NovikovRep(F, -dual(rep.l_odot), dual(rep.r_prec)),
    }


def sum_structure(field: Field, c_a, c_v, l, r, l2=None, r2=None) -> np.ndarray:
    """Structure tensor on A (+) V for

    (x+u)*(y+v) = x*y + l2(u)y + r2(v)x + u*v + l(x)v + r(y)u

    where l, r: A -> End(V) and l2, r2: V -> End(A) (zero when omitted).
    """
    n = c_a.shape[0]
    m = c_v.shape[0] if c_v is not None else l.shape[1]
    c = field.zeros((n + m,) * 3)
    c[:n, :n, :n] = c_a
    if c_v is not None:
        c[n:, n:, n:] = c_v
    # e_i * v_j = l(e_i) v_j ; v_j * e_i = r(e_i) v_j
    c[:n, n:, n:] = l.transpose(0, 2, 1)
    c[n:, :n, n:] = r.transpose(2, 0, 1)
    if l2 is not None:
        c[n:, :n, :n] = l2.transpose(0, 2, 1)
    if r2 is not None:
        c[:n, n:, :n] = r2.transpose(2, 0, 1)
    return field.reduce(c)


def semidirect_apn(A: APNAlgebra, rep: APNRep) -> APNAlgebra:
    F = A.field
    return APNAlgebra(F,
                      sum_structure(F, A.succ, None, rep.l_succ, rep.r_succ),
                      sum_structure(F, A.prec, None, rep.l_prec, rep.r_prec))


def semidirect_novikov(N: NovikovAlgebra, rep: NovikovRep) -> NovikovAlgebra:
    return NovikovAlgebra(N.field, sum_structure(N.field, N.op, None, rep.l, rep.r))


# ---------------------------------------------------------------- checks


def novikov_rep_residuals(field: Field, c: np.ndarray, l: np.ndarray, r: np.ndarray) -> dict:
    n, m = c.shape[0], l.shape[1]
    x, y, v = basis_vars(field, [n, n, m])

    def o(a, b):
        return prod(field, c, a, b)

    def L(a, w):
        return act(field, l, a, w)

    def R(a, w):
        return act(field, r, a, w)

    return {
        "Nr1": L(o(x, y) - o(y, x), v) - L(x, L(y, v)) + L(y, L(x, v)),
        "Nr2": L(x, R(y, v)) - R(y, L(x, v)) - R(o(x, y), v) + R(y, R(x, v)),
        "Nr3a": L(o(x, y), v) - R(y, L(x, v)),
        "Nr3b": R(x, R(y, v)) - R(y, R(x, v)),
    }


def check_novikov_rep(N: NovikovAlgebra, rep: NovikovRep) -> IdentityReport:
    _check_dims(N.dim, rep.l)
    out = IdentityReport(N.field)
    shape = (N.dim, N.dim, rep.dim)
    for tag, res in novikov_rep_residuals(N.field, N.op, rep.l, rep.r).items():
        out.add(tag, res, shape)
    return out


def apn_rep_residuals(A: APNAlgebra, rep: APNRep) -> dict:
    F = A.field
    n, m = A.dim, rep.dim
    x, y, v = basis_vars(F, [n, n, m])

    def o(a, b):
        return prod(F, A.circ, a, b)

    def sc(a, b):
        return prod(F, A.succ, a, b)

    def pr(a, b):
        return prod(F, A.prec, a, b)

    def f(fam):
        return lambda a, w: act(F, fam, a, w)

    ls, rs, lp, rp = f(rep.l_succ), f(rep.r_succ), f(rep.l_prec), f(rep.r_prec)
    lc, rc = f(rep.l_circ), f(rep.r_circ)
    return {
        "rp1": ls(o(x, y) - o(y, x), v) - ls(y, ls(x, v)) + ls(x, ls(y, v)),
        "rp2": rp(o(x, y), v) - rp(y, ls(x, v)) + rp(y, rp(x, v)) + ls(x, rp(y, v)),
        "rp3a": ls(o(x, y), v) + rp(y, ls(x, v)),
        "rp3b": lp(pr(x, y), v) - rp(y, lp(x, v)),
        "rp4": lp(o(x, y) - o(y, x), v) - ls(x, lc(y, v)) + ls(y, lc(x, v)),
        "rp5": rs(x, lc(y, v) - rc(y, v)) - rs(sc(y, x), v) + ls(y, rs(x, v)),
        "rp6": lp(x, lc(y, v)) - lp(sc(y, x), v) + lp(pr(x, y), v) + ls(y, lp(x, v)),
        "rp7": rp(x, lc(y, v) - rc(y, v)) - ls(y, rc(x, v)) + rs(o(y, x), v),
        "rp8a": rs(x, lc(y, v)) + lp(sc(y, x), v),
        "rp8b": rp(x, rp(y, v)) - rp(y, rp(x, v)),
        "rp9": lp(x, rc(y, v)) - rp(y, rs(x, v)) + rp(y, lp(x, v)) + rs(pr(x, y), v),
        "rp10": rs(x, rc(y, v)) + rp(y, rs(x, v)),
    }


def check_apn_rep(A: APNAlgebra, rep: APNRep) -> IdentityReport:
    _check_dims(A.dim, rep.l_succ)
    out = IdentityReport(A.field)
    shape = (A.dim, A.dim, rep.dim)
    for tag, res in apn_rep_residuals(A, rep).items():
        out.add(tag, res, shape)
    return out


def _check_dims(n: int, fam: np.ndarray):
    if fam.shape[0] != n:
        raise ValueError(f"representation is indexed by a {fam.shape[0]}-dim space, algebra has dim {n}")
