"""Named small examples used by the tests, the acceptance suite and the CLI."""

from __future__ import annotations

import numpy as np

from .algebra import APNAlgebra, NovikovAlgebra, apn, novikov, onedim_apn
from .exactlin import Field
from .representation import regular_apn_rep


def n2(field: Field | None = None) -> NovikovAlgebra:
    """e1 o e1 = e1, e2 o e1 = e2."""
    F = field or Field.rational()
    return novikov(F, 2, {(0, 0): {0: 1}, (1, 0): {1: 1}})


def n2_anti_rb(field: Field | None = None, a=1) -> np.ndarray:
    """T(e1) = a e2, T(e2) = 0."""
    F = field or Field.rational()
    return F.array([[0, 0], [a, 0]])


def n3_nonstrong(field: Field | None = None) -> NovikovAlgebra:
    """A 3-dim Novikov algebra (found by search over GF(3)) with many non-strong
    anti-Rota-Baxter operators."""
    F = field or Field.gf(3)
    return NovikovAlgebra(F, F.array([[[2, 0, 0], [0, 0, 0], [0, 0, 2]],
                                      [[0, 0, 0], [0, 2, 0], [0, 0, 0]],
                                      [[0, 0, 2], [0, 0, 0], [1, 0, 0]]]))


def a3(field: Field | None = None) -> APNAlgebra:
    """e1 > e1 = e2, e1 > e2 = e3."""
    F = field or Field.rational()
    return apn(F, 3, {(0, 0): {1: 1}, (0, 1): {2: 1}})


def a2(field: Field | None = None, a=1) -> APNAlgebra:
    """e1 > e1 = a e2."""
    F = field or Field.rational()
    return apn(F, 2, {(0, 0): {1: a}})


def onedim(field: Field | None = None, p=0, q=0) -> APNAlgebra:
    return onedim_apn(field or Field.rational(), p, q)


def o_operator_predicate(field: Field, T) -> bool:
    """t2 = 0 and t1 (t1 - 2 t4) = 0 for T = [[t1, t2], [t3, t4]]."""
    T = field.array(T)
    t1, t2, t4 = T[0, 0], T[0, 1], T[1, 1]
    return field.is_zero_scalar(t2) and field.is_zero_scalar(field.scalar(t1 * (t1 - 2 * t4)))


def worked_T(field: Field | None = None, t1=2, t3=0, t4=1) -> np.ndarray:
    F = field or Field.rational()
    return F.array([[t1, 0], [t3, t4]])


def worked_example(field: Field | None = None, a=1, t1=2, t3=0, t4=1):
    """(A2 semidirect A*, skew s = T - tau(T), coboundary cobracket).

    Basis order of the semidirect product: e1, e2, e1*, e2*.
    """
    from .bialgebra.ybe import coboundary_delta, semidirect_ybe_solution
    F = field or Field.rational()
    A = a2(F, a)
    hat, s = semidirect_ybe_solution(A, regular_apn_rep(A), worked_T(F, t1, t3, t4))
    return hat, s, coboundary_delta(hat, s)


def worked_semidirect_products(field: Field | None = None, a=1) -> dict:
    """The displayed nonzero products of A2 semidirect A*, as {(op, i, j): {k: coef}}."""
    F = field or Field.rational()
    a = F.scalar(a)
    return {
        ("succ", 0, 0): {1: a},
        ("succ", 0, 3): {2: 2 * a},
        ("succ", 3, 0): {2: a},
        ("prec", 0, 3): {2: -a},
        ("prec", 3, 0): {2: -a},
    }


def worked_cobracket_display(field: Field | None = None, a=1, t1=2, t3=0, t4=1) -> dict:
    """The four displayed cobracket values as {(op, i): {(j, k): coef}}.

    The fourth display is labelled with the succ component in print; it is
    read as the prec component of e2*.
    """
    F = field or Field.rational()
    a, t1, t4 = F.scalar(a), F.scalar(t1), F.scalar(t4)
    return {
        ("succ", 0): {(1, 2): a * (t4 - t1), (2, 1): a * (2 * t4 - t1)},
        ("succ", 3): {(2, 2): -2 * a * t1},
        ("prec", 0): {(1, 2): a * (t1 - t4), (2, 1): a * (t1 - t4)},
        ("prec", 3): {(2, 2): -a * t1},
    }
