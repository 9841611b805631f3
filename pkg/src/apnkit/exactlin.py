"""Exact scalars, dense arrays and linear algebra over Q and GF(p).

Rational arrays are numpy object arrays holding ints/Fractions; GF(p)
arrays are int64 arrays kept reduced into [0, p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class FieldError(ValueError):
    """Raised for scalars that do not live in the requested field."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise FieldError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise FieldError(f"zero denominator in {text!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class Field:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise FieldError("rational field takes no modulus")
        elif self.kind == "gf":
            if self.p is None or not _is_prime(int(self.p)):
                raise FieldError(f"GF(p) needs a prime p, got {self.p}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "Field":
        return cls("rational")

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("gf", int(p))

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    @property
    def dtype(self):
        return object if self.is_rational else np.int64

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"GF({self.p})"

    # scalars

    def scalar(self, value, coerce: bool = True):
        """Coerce an int, Fraction or "num/den" string into the field.

        Over GF(p) a non-integral rational is only accepted with coerce=True,
        in which case the denominator is inverted mod p.
        """
        if isinstance(value, str):
            value = parse_rational(value)
        elif isinstance(value, (np.integer,)):
            value = int(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FieldError(f"cannot coerce {value!r} into {self}")
        if self.is_rational:
            return Fraction(value)
        v = Fraction(value)
        if v.denominator == 1:
            return int(v.numerator) % self.p
        if not coerce:
            raise FieldError(f"{value} is not an integer; pass a coercion flag to map it into {self}")
        if v.denominator % self.p == 0:
            raise FieldError(f"{value} has a denominator divisible by {self.p}")
        return (v.numerator * pow(v.denominator, -1, self.p)) % self.p

    def inv(self, x):
        if self.is_zero_scalar(x):
            raise ZeroDivisionError(f"zero has no inverse in {self}")
        if self.is_rational:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def is_zero_scalar(self, x) -> bool:
        if self.is_rational:
            return x == 0
        return int(x) % self.p == 0

    def fmt(self, x) -> str:
        if self.is_rational:
            f = Fraction(x)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        return str(int(x) % self.p)

    def elements(self) -> list:
        if self.is_rational:
            raise FieldError("Q is infinite")
        return list(range(self.p))

    # arrays

    def array(self, data, coerce: bool = True) -> np.ndarray:
        raw = np.asarray(data, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for idx, v in np.ndenumerate(raw):
            out[idx] = self.scalar(v, coerce=coerce)
        return out if self.is_rational else out.astype(np.int64)

    def zeros(self, shape) -> np.ndarray:
        if self.is_rational:
            z = np.empty(shape, dtype=object)
            z.fill(Fraction(0))
            return z
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        m = self.zeros((n, n))
        for i in range(n):
            m[i, i] = self.scalar(1)
        return m

    def reduce(self, arr) -> np.ndarray:
        """Normalise an array produced by ring operations."""
        arr = np.asarray(arr)
        if self.is_rational:
            if arr.dtype != object:
                arr = arr.astype(object)
            return arr
        if arr.dtype == object:
            arr = np.vectorize(lambda v: int(v) % self.p, otypes=[np.int64])(arr) if arr.size else arr.astype(np.int64)
            return arr
        return np.mod(arr, self.p)

    def is_zero(self, arr) -> bool:
        arr = self.reduce(arr)
        return not np.any(arr != 0)

    def equal(self, a, b) -> bool:
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape != b.shape:
            return False
        return self.is_zero(a - b)


def as_field(field) -> Field:
    """Accept a Field or a spec string such as "Q", "rational", "gf:5", "GF(5)"."""
    if isinstance(field, Field):
        return field
    if isinstance(field, str):
        text = field.strip().lower()
        if text in ("q", "qq", "rational"):
            return Field.rational()
        m = re.fullmatch(r"gf\s*[:(]?\s*(\d+)\s*\)?", text)
        if m:
            return Field.gf(int(m.group(1)))
    raise FieldError(f"cannot interpret field {field!r}")


# ---------------------------------------------------------------- elimination


def _rows_to_ints(field: Field, M: np.ndarray) -> list[list[int]]:
    """Clear denominators row by row (rational) or take residues (GF)."""
    rows = []
    for row in M.tolist():
        if field.is_rational:
            fr = [Fraction(v) for v in row]
            den = 1
            for v in fr:
                den = den * v.denominator // gcd(den, v.denominator)
            rows.append([int(v * den) for v in fr])
        else:
            rows.append([int(v) % field.p for v in row])
    return rows


def _row_normalise(field: Field, row: list[int]) -> list[int]:
    if not field.is_rational:
        return [v % field.p for v in row]
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def _echelon(field: Field, rows: list[list[int]], ncols: int):
    """Fraction-free Gauss-Jordan on integer rows, first nonzero pivot.

    Only the first ncols columns are used for pivoting. Returns the reduced
    rows and the list of (row, col) pivots.
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(len(rows)):
            if i == r or rows[i][c] == 0:
                continue
            f = rows[i][c]
            rows[i] = _row_normalise(field, [pr[c] * a - f * b for a, b in zip(rows[i], pr)])
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _divide(field: Field, num: int, den: int):
    if field.is_rational:
        return Fraction(num, den)
    return (num * pow(den, -1, field.p)) % field.p


def rank(field: Field, M) -> int:
    M = field.array(M)
    if M.size == 0:
        return 0
    _, pivots = _echelon(field, _rows_to_ints(field, M), M.shape[1])
    return len(pivots)


def solve_linear(field: Field, M, b):
    """One solution of M x = b (free variables set to 0), or None."""
    M = field.array(M)
    b = field.array(b)
    if M.ndim != 2 or b.shape != (M.shape[0],):
        raise ValueError(f"shape mismatch: {M.shape} vs {b.shape}")
    m, n = M.shape
    aug = np.concatenate([M, b.reshape(m, 1)], axis=1)
    rows, pivots = _echelon(field, _rows_to_ints(field, aug), n)
    for row in rows[len(pivots):]:
        if row[n] != 0:
            return None
    x = field.zeros(n)
    for r, c in pivots:
        x[c] = _divide(field, rows[r][n], rows[r][c])
    if not field.equal(field.reduce(M.dot(x)), b):
        raise ArithmeticError("elimination produced a non-solution")
    return x


def invert(field: Field, M):
    """Exact inverse, or None when M is singular."""
    M = field.array(M)
    n, m = M.shape
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return field.zeros((0, 0))
    aug = np.concatenate([M, field.eye(n)], axis=1)
    rows, pivots = _echelon(field, _rows_to_ints(field, aug), n)
    if len(pivots) < n:
        return None
    inv = field.zeros((n, n))
    for r, c in pivots:
        for j in range(n):
            inv[c, j] = _divide(field, rows[r][n + j], rows[r][c])
    if not field.equal(field.reduce(M.dot(inv)), field.eye(n)):
        raise ArithmeticError("elimination produced a wrong inverse")
    return inv


def det(field: Field, M):
    """Determinant by Gaussian elimination with exact division."""
    M = field.array(M)
    n, m = M.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in M.tolist()]
    if field.is_rational:
        a = [[Fraction(v) for v in row] for row in a]
    d = field.scalar(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if not field.is_zero_scalar(a[i][c])), None)
        if piv is None:
            return field.scalar(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d = d * a[c][c]
        inv = field.inv(a[c][c])
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if not field.is_zero_scalar(f):
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
                if not field.is_rational:
                    a[i] = [x % field.p for x in a[i]]
        if not field.is_rational:
            d %= field.p
    return d if field.is_rational else d % field.p


def nullspace(field: Field, M) -> list[np.ndarray]:
    """Basis of {x : M x = 0}, one vector per free column."""
    M = field.array(M)
    m, n = M.shape
    rows, pivots = _echelon(field, _rows_to_ints(field, M), n)
    pivot_cols = {c: r for r, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = field.zeros(n)
        v[free] = field.scalar(1)
        for c, r in pivot_cols.items():
            v[c] = _divide(field, -rows[r][free], rows[r][c])
        basis.append(v)
    return basis


_INT64_SAFE = 2 ** 62


def _scaled(arr: np.ndarray) -> tuple[np.ndarray, int]:
    """Integer numerators over one common denominator."""
    flat = [Fraction(v) for v in arr.ravel().tolist()]
    den = 1
    for v in flat:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = np.empty(len(flat), dtype=object)
    ints[:] = [v.numerator * (den // v.denominator) for v in flat]
    return ints.reshape(arr.shape), den


def contract(field: Field, spec: str, *arrays) -> np.ndarray:
    """Exact einsum. Over Q the operands are scaled to integers first and the
    sum runs in int64 whenever the worst case cannot overflow."""
    arrays = [np.asarray(a) for a in arrays]
    if any(a.size == 0 for a in arrays):
        return field.reduce(np.einsum(spec, *[a.astype(object) for a in arrays]))
    terms = 1
    for a in arrays:
        terms *= a.size
    if field.is_rational:
        pairs = [_scaled(a) for a in arrays]
        ints = [p[0] for p in pairs]
        den = 1
        for _, d in pairs:
            den *= d
    else:
        ints = [a.astype(object) if a.dtype == object else a for a in arrays]
        den = 1
    bound = terms
    for a in ints:
        if a.dtype == object:
            bound *= max(abs(int(v)) for v in a.ravel().tolist()) or 1
        else:
            bound *= int(np.abs(a).max()) or 1
    if bound < _INT64_SAFE:
        ints = [a.astype(np.int64) for a in ints]
    else:
        ints = [a.astype(object) for a in ints]
    out = np.einsum(spec, *ints)
    if not field.is_rational:
        return field.reduce(out)
    out = np.asarray(out)
    res = np.empty(out.shape, dtype=object)
    res.ravel()[:] = [Fraction(int(v), den) for v in out.ravel().tolist()] if out.size else []
    return res


def matmul(field: Field, *mats) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = field.reduce(np.matmul(out, m))
    return out


def block(field: Field, grid: Sequence[Sequence]) -> np.ndarray:
    """Assemble a block matrix; None entries become zero blocks."""
    heights = []
    for row in grid:
        h = next((b.shape[0] for b in row if b is not None), None)
        heights.append(h)
    widths = []
    for j in range(len(grid[0])):
        w = next((row[j].shape[1] for row in grid if row[j] is not None), None)
        widths.append(w)
    out_rows = []
    for i, row in enumerate(grid):
        parts = [b if b is not None else field.zeros((heights[i], widths[j])) for j, b in enumerate(row)]
        out_rows.append(np.concatenate(parts, axis=1))
    return field.reduce(np.concatenate(out_rows, axis=0))


# ---------------------------------------------------------------- tensors


@dataclass(frozen=True)
class Perm3:
    """Permutation of the three legs of a 3-tensor.

    images[k] is the input leg that lands in output leg k, so
    S12 maps x(x)y(x)z to y(x)x(x)z.
    """

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2]:
            raise ValueError(f"not a permutation of legs: {self.images}")

    def __mul__(self, other: "Perm3") -> "Perm3":
        # (self * other)(t) == self(other(t))
        return Perm3(tuple(other.images[self.images[k]] for k in range(3)))

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for k, i in enumerate(self.images):
            inv[i] = k
        return Perm3(tuple(inv))


ID3 = Perm3((0, 1, 2))
S12 = Perm3((1, 0, 2))
S13 = Perm3((2, 1, 0))
S23 = Perm3((0, 2, 1))
S132 = Perm3((2, 0, 1))  # x(x)y(x)z -> z(x)x(x)y


def permute3(t: np.ndarray, sigma: Perm3) -> np.ndarray:
    if t.ndim != 3:
        raise ValueError("permute3 needs a 3-tensor")
    return np.transpose(t, sigma.images).copy()


def tau2(s: np.ndarray) -> np.ndarray:
    if s.ndim != 2:
        raise ValueError("tau2 needs a 2-tensor")
    return s.T.copy()


def iter_tuples(sizes: Iterable[int]):
    return np.ndindex(*tuple(sizes))
