"""Evaluate multilinear identities on all basis tuples at once.

Every variable of an identity is bound to a stack of basis vectors that
occupies its own broadcast axis, so an expression built from the helpers
below yields the residual for every basis tuple in one array of shape
(n_1, ..., n_k, *value_shape).
"""

from __future__ import annotations

import numpy as np

from .exactlin import Field, contract


def basis_vars(field: Field, dims: list[int]) -> list[np.ndarray]:
    k = len(dims)
    out = []
    for axis, n in enumerate(dims):
        shape = [1] * k + [n]
        shape[axis] = n
        out.append(field.eye(n).reshape(shape))
    return out


def prod(field: Field, c: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x * y for a structure tensor c[i, j, k]."""
    return contract(field, "...i,ijk,...j->...k", x, c, y)


def op_at(field: Field, fam: np.ndarray, x: np.ndarray) -> np.ndarray:
    """The matrix f(x) for a linear family fam[i] = f(e_i)."""
    return contract(field, "...i,iab->...ab", x, fam)


def act(field: Field, fam: np.ndarray, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """f(x) v."""
    return contract(field, "...i,iab,...b->...a", x, fam, v)


def apply(field: Field, m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Fixed matrix applied to a stack of vectors."""
    return contract(field, "...j,ij->...i", v, m)


def full(residual: np.ndarray, batch_shape: tuple) -> np.ndarray:
    residual = np.asarray(residual)
    nb = len(batch_shape)
    return np.broadcast_to(residual, tuple(batch_shape) + residual.shape[nb:])
