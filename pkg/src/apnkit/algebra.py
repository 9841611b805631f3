"""Novikov and anti-pre-Novikov (APN) algebras given by structure constants.

A structure tensor c has c[i, j, k] = coefficient of e_k in e_i * e_j.
Multiplication operators are stored as stacks of matrices acting on
column vectors: L[i] is the matrix of y -> e_i * y, R[j] of x -> x * e_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactlin import Field
from .multilinear import basis_vars, prod
from .report import IdentityReport


def left_mult(c: np.ndarray) -> np.ndarray:
    return c.transpose(0, 2, 1).copy()


def right_mult(c: np.ndarray) -> np.ndarray:
    return c.transpose(1, 2, 0).copy()


def _check_tensor(field: Field, c, name: str) -> np.ndarray:
    c = field.reduce(np.asarray(c))
    if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
        raise ValueError(f"{name} must be an n x n x n structure tensor, got shape {c.shape}")
    return c


@dataclass(frozen=True, eq=False)
class NovikovAlgebra:
    field: Field
    op: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "op", _check_tensor(self.field, self.op, "op"))

    @property
    def dim(self) -> int:
        return self.op.shape[0]

    @cached_property
    def L(self) -> np.ndarray:
        return left_mult(self.op)

    @cached_property
    def R(self) -> np.ndarray:
        return right_mult(self.op)

    def mul(self, x, y):
        return prod(self.field, self.op, np.asarray(x), np.asarray(y))

    def __eq__(self, other) -> bool:
        return (isinstance(other, NovikovAlgebra) and self.field == other.field
                and self.field.equal(self.op, other.op))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class APNAlgebra:
    field: Field
    succ: np.ndarray
    prec: np.ndarray

    def __post_init__(self):
        s = _check_tensor(self.field, self.succ, "succ")
        p = _check_tensor(self.field, self.prec, "prec")
        if s.shape != p.shape:
            raise ValueError("succ and prec must have the same dimension")
        object.__setattr__(self, "succ", s)
        object.__setattr__(self, "prec", p)

    @property
    def dim(self) -> int:
        return self.succ.shape[0]

    # derived products: x o y, x (.) y = x>y + y<x, x * y = x o y + y o x
    @cached_property
    def circ(self) -> np.ndarray:
        return self.field.reduce(self.succ + self.prec)

    @cached_property
    def odot(self) -> np.ndarray:
        return self.field.reduce(self.succ + self.prec.transpose(1, 0, 2))

    @cached_property
    def star(self) -> np.ndarray:
        return self.field.reduce(self.circ + self.circ.transpose(1, 0, 2))

    @cached_property
    def L_succ(self):
        return left_mult(self.succ)

    @cached_property
    def R_succ(self):
        return right_mult(self.succ)

    @cached_property
    def L_prec(self):
        return left_mult(self.prec)

    @cached_property
    def R_prec(self):
        return right_mult(self.prec)

    @cached_property
    def L_circ(self):
        return left_mult(self.circ)

    @cached_property
    def R_circ(self):
        return right_mult(self.circ)

    @cached_property
    def L_odot(self):
        return left_mult(self.odot)

    @cached_property
    def R_odot(self):
        return right_mult(self.odot)

    @cached_property
    def L_star(self):
        return left_mult(self.star)

    def associated(self) -> NovikovAlgebra:
        return NovikovAlgebra(self.field, self.circ)

    def __eq__(self, other) -> bool:
        return (isinstance(other, APNAlgebra) and self.field == other.field
                and self.field.equal(self.succ, other.succ) and self.field.equal(self.prec, other.prec))

    __hash__ = None


def novikov(field: Field, dim: int, products: dict) -> NovikovAlgebra:
    """Build from a sparse table {(i, j): {k: coef}} (0-based)."""
    return NovikovAlgebra(field, _sparse_tensor(field, dim, products))


def apn(field: Field, dim: int, succ: dict | None = None, prec: dict | None = None) -> APNAlgebra:
    return APNAlgebra(field, _sparse_tensor(field, dim, succ or {}), _sparse_tensor(field, dim, prec or {}))


def _sparse_tensor(field: Field, dim: int, products: dict) -> np.ndarray:
    c = field.zeros((dim, dim, dim))
    for (i, j), out in products.items():
        for k, v in out.items():
            c[i, j, k] = field.scalar(v)
    return c


def zero_apn(field: Field, dim: int) -> APNAlgebra:
    return APNAlgebra(field, field.zeros((dim,) * 3), field.zeros((dim,) * 3))


# ---------------------------------------------------------------- checks


def novikov_residuals(field: Field, c: np.ndarray) -> dict:
    n = c.shape[0]
    x, y, z = basis_vars(field, [n, n, n])

    def o(a, b):
        return prod(field, c, a, b)

    return {
        "Na1": o(o(x, y), z) - o(x, o(y, z)) - o(o(y, x), z) + o(y, o(x, z)),
        "Na2": o(o(x, y), z) - o(o(x, z), y),
    }


def check_novikov(N: NovikovAlgebra) -> IdentityReport:
    rep = IdentityReport(N.field)
    shape = (N.dim,) * 3
    for tag, res in novikov_residuals(N.field, N.op).items():
        rep.add(tag, res, shape)
    return rep


def apn_residuals(A: APNAlgebra) -> dict:
    F = A.field
    n = A.dim
    x, y, z = basis_vars(F, [n, n, n])

    def sc(a, b):
        return prod(F, A.succ, a, b)

    def pr(a, b):
        return prod(F, A.prec, a, b)

    def o(a, b):
        return prod(F, A.circ, a, b)

    return {
        "Aa1": sc(o(x, y) - o(y, x), z) - sc(y, sc(x, z)) + sc(x, sc(y, z)),
        "Aa2": pr(x, o(y, z)) - pr(sc(y, x), z) + pr(pr(x, y), z) + sc(y, pr(x, z)),
        "Aa3": sc(o(x, y), z) + pr(sc(x, z), y),
        "Aa4": pr(pr(x, y), z) - pr(pr(x, z), y),
        "Aa5": pr(o(x, y) - o(y, x), z) - sc(x, o(y, z)) + sc(y, o(x, z)),
    }


def check_apn(A: APNAlgebra, tags=None) -> IdentityReport:
    """Check the five defining identities (or a chosen subset)."""
    rep = IdentityReport(A.field)
    shape = (A.dim,) * 3
    for tag, res in apn_residuals(A).items():
        if tags is None or tag in tags:
            rep.add(tag, res, shape)
    return rep


def apn_derived_residuals(A: APNAlgebra) -> dict:
    """Identities that every APN algebra satisfies as a consequence."""
    F = A.field
    n = A.dim
    x, y, z = basis_vars(F, [n, n, n])

    def m(c):
        return lambda a, b: prod(F, c, a, b)

    sc, pr, o, od, st = m(A.succ), m(A.prec), m(A.circ), m(A.odot), m(A.star)
    x2, y2 = basis_vars(F, [n, n])
    return {
        "D1": (pr(sc(x, z), y) - pr(sc(x, y), z), 3),
        "D2": (sc(o(x, y), z) - sc(o(x, z), y), 3),
        "D3": (pr(o(x, y), z) - pr(o(x, z), y), 3),
        "Aa7a": (st(x2, y2) - od(x2, y2) - od(y2, x2), 2),
        "Aa7b": (st(o(x, y), z) - st(x, o(z, y)), 3),
        "Aa8a": (od(x, st(y, z)) - od(z, st(x, y)) - od(y, o(x, z) - o(z, x)), 3),
        "Aa8b": (sc(x, o(y, z)) - od(y, o(x, z)) + pr(o(y, x), z), 3),
    }


def check_apn_derived(A: APNAlgebra) -> IdentityReport:
    rep = IdentityReport(A.field)
    for tag, (res, k) in apn_derived_residuals(A).items():
        rep.add(tag, res, (A.dim,) * k)
    return rep


check_derived_identities = check_apn_derived


def derived_ops(A: APNAlgebra) -> tuple[np.ndarray, np.ndarray]:
    """(odot, star) structure tensors."""
    return A.odot, A.star


def check_bimodule_characterization(A: APNAlgebra) -> IdentityReport:
    """(A, -L_succ, -R_prec) as a module of the associated Novikov algebra."""
    from .representation import NovikovRep, check_novikov_rep
    return check_novikov_rep(A.associated(), NovikovRep(A.field, -A.L_succ, -A.R_prec))


def apn_equivalences(A: APNAlgebra) -> dict:
    """The three equivalent descriptions of an APN algebra, evaluated separately."""
    nov = check_novikov(A.associated()).passed
    bimod = check_bimodule_characterization(A).passed
    return {
        "apn": check_apn(A).passed,
        "novikov_and_Aa1_Aa4": nov and check_apn(A, tags=("Aa1", "Aa2", "Aa3", "Aa4")).passed,
        "novikov_and_bimodule": nov and bimod,
    }


def associated_novikov(A: APNAlgebra) -> NovikovAlgebra:
    return A.associated()


def is_subalgebra(field: Field, c: np.ndarray, idx) -> bool:
    """Whether span{e_i : i in idx} is closed under c."""
    idx = list(idx)
    rest = [k for k in range(c.shape[0]) if k not in idx]
    block = c[np.ix_(idx, idx, rest)]
    return field.is_zero(block)


def onedim_apn(field: Field, p, q) -> APNAlgebra:
    return apn(field, 1, {(0, 0): {0: p}}, {(0, 0): {0: q}})
