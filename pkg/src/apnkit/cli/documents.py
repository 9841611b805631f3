"""JSON documents for algebras, representations, tensors and maps.

Layout (all indices 0-based, coefficients as integers or "num/den" strings,
optionally times parameter names, e.g. "-2a" or "1/2*a*t1"):

    {"field": {"kind": "rational"} | {"kind": "gf", "p": 5},
     "dim": n,
     "ops": {"succ": [[i, j, k, c], ...], "prec": [...]}      APN algebra
     "ops": {"circ": [[i, j, k, c], ...]}                      Novikov algebra
     "rep": {"dim": m, "l_succ": [matrix, ...], ...}           or {"l", "r"}
     "cobracket": {"succ": [[i, j, k, c], ...], "prec": [...]}
     "s": [[i, j, c], ...],
     "T" / "P" / "omega": matrix (list of rows),
     "weight": c,
     "params": {"a": "1"}}

A matched pair uses "first" and "second" sub-documents (each with "dim" and
"ops") plus "rep1" (first acting on second) and "rep2".
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

import numpy as np

from ..algebra import APNAlgebra, NovikovAlgebra
from ..bialgebra.coalgebra import Cobracket
from ..exactlin import Field, FieldError, as_field, parse_rational
from ..matched_pair import APNMatchedPair
from ..representation import APNRep, NovikovRep

APN_REP_KEYS = ("l_succ", "r_succ", "l_prec", "r_prec")
NOVIKOV_REP_KEYS = ("l", "r")

_TERM_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<num>\d+(?:\s*/\s*\d+)?)?\s*\*?\s*"
    r"(?P<names>[A-Za-z_]\w*(?:\s*\*\s*[A-Za-z_]\w*)*)?\s*$")


class DocumentError(ValueError):
    """Malformed input document; the message names the offending field."""


# ---------------------------------------------------------------- reading


class Reader:
    """Turns raw JSON values into field elements with path-aware errors."""

    def __init__(self, field: Field, params: dict | None = None, coerce: bool = False):
        self.field = field
        self.coerce = coerce
        self.params = {}
        for k, v in (params or {}).items():
            self.params[k] = self._literal(v, f"params.{k}")

    def _literal(self, v, where):
        try:
            if isinstance(v, str):
                v = parse_rational(v)
            elif isinstance(v, float) or isinstance(v, bool):
                raise FieldError(f"use an integer or a \"num/den\" string, not {v!r}")
            return self.field.scalar(v, coerce=self.coerce)
        except FieldError as e:
            raise DocumentError(f"{where}: {e}") from None

    def coef(self, v, where: str):
        if not isinstance(v, str):
            return self._literal(v, where)
        m = _TERM_RE.match(v)
        if not m or (m.group("num") is None and m.group("names") is None):
            raise DocumentError(f"{where}: cannot parse coefficient {v!r}")
        val = self._literal(m.group("num") or "1", where)
        if m.group("sign") == "-":
            val = -val
        for name in (m.group("names") or "").split("*"):
            name = name.strip()
            if not name:
                continue
            if name not in self.params:
                raise DocumentError(f"{where}: unknown parameter {name!r} (use --param {name}=...)")
            val = val * self.params[name]
        return self.field.scalar(val) if self.field.is_rational else int(val) % self.field.p

    def matrix(self, rows, where: str, shape=None) -> np.ndarray:
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise DocumentError(f"{where}: expected a list of rows")
        out = [[self.coef(v, f"{where}[{i}][{j}]") for j, v in enumerate(r)]
               for i, r in enumerate(rows)]
        if len({len(r) for r in out}) > 1:
            raise DocumentError(f"{where}: ragged rows")
        M = self.field.array(out) if out else self.field.zeros((0, 0))
        if shape is not None and M.shape != tuple(shape):
            raise DocumentError(f"{where}: expected shape {tuple(shape)}, got {M.shape}")
        return M

    def vector(self, vals, where: str, n: int) -> np.ndarray:
        if not isinstance(vals, list) or len(vals) != n:
            raise DocumentError(f"{where}: expected a list of {n} coefficients")
        return self.field.array([self.coef(v, f"{where}[{i}]") for i, v in enumerate(vals)])

    def sparse(self, entries, where: str, shape) -> np.ndarray:
        t = self.field.zeros(tuple(shape))
        if not isinstance(entries, list):
            raise DocumentError(f"{where}: expected a list of entries")
        r = len(shape)
        for e, item in enumerate(entries):
            here = f"{where}[{e}]"
            if not isinstance(item, list) or len(item) != r + 1:
                raise DocumentError(f"{here}: expected {r} indices and a coefficient")
            idx = item[:r]
            if not all(isinstance(i, int) and not isinstance(i, bool) and 0 <= i < d
                       for i, d in zip(idx, shape)):
                raise DocumentError(f"{here}: index out of range for shape {tuple(shape)}")
            t[tuple(idx)] = t[tuple(idx)] + self.coef(item[r], here)
        return self.field.reduce(t)

    def family(self, mats, where: str, count: int, m: int) -> np.ndarray:
        if not isinstance(mats, list) or len(mats) != count:
            raise DocumentError(f"{where}: expected {count} matrices")
        fam = [self.matrix(M, f"{where}[{i}]", (m, m)) for i, M in enumerate(mats)]
        return self.field.reduce(np.stack(fam)) if fam else self.field.zeros((0, m, m))


def parse_field(spec) -> Field:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise DocumentError("field: expected {\"kind\": \"rational\"} or {\"kind\": \"gf\", \"p\": p}")
    try:
        if spec["kind"] == "rational":
            return Field.rational()
        if spec["kind"] == "gf":
            return Field.gf(int(spec.get("p", 0)))
    except (FieldError, TypeError, ValueError) as e:
        raise DocumentError(f"field: {e}") from None
    raise DocumentError(f"field.kind: unknown kind {spec['kind']!r}")


def read_json(path) -> dict:
    text = Path(path).read_text() if str(path) != "-" else __import__("sys").stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError(f"{path}: top level must be an object")
    return doc


class Document:
    """A parsed input document; parts are decoded on demand."""

    def __init__(self, raw: dict, field=None, params=None, coerce=False):
        self.raw = raw
        self.field = as_field(field) if field is not None else parse_field(raw.get("field"))
        merged = dict(raw.get("params") or {})
        merged.update(params or {})
        self.reader = Reader(self.field, merged, coerce)

    def has(self, key: str) -> bool:
        return key in self.raw

    def _get(self, key: str, where: str | None = None):
        if key not in self.raw:
            raise DocumentError(f"{where or key}: missing")
        return self.raw[key]

    @property
    def dim(self) -> int:
        n = self._get("dim")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise DocumentError("dim: expected a non-negative integer")
        return n

    def kind(self) -> str:
        ops = self.raw.get("ops") or {}
        return "novikov" if ("circ" in ops or "op" in ops) else "apn"

    def apn(self) -> APNAlgebra:
        return _apn_from(self.reader, self.raw, "")

    def novikov(self) -> NovikovAlgebra:
        if self.kind() != "novikov":
            return self.apn().associated()
        n = self.dim
        ops = self._get("ops")
        key = "circ" if "circ" in ops else "op"
        return NovikovAlgebra(self.field, self.reader.sparse(ops[key], f"ops.{key}", (n, n, n)))

    def apn_rep(self, key: str = "rep", n: int | None = None) -> APNRep:
        return _apn_rep_from(self.reader, self._get(key), key, self.dim if n is None else n)

    def novikov_rep(self, key: str = "rep") -> NovikovRep:
        rep = self._get(key)
        n, m = self.dim, _rep_dim(rep, key)
        fams = [self.reader.family(rep.get(k), f"{key}.{k}", n, m) for k in NOVIKOV_REP_KEYS]
        return NovikovRep(self.field, *fams)

    def module_algebra(self, key: str = "module") -> APNAlgebra:
        return _apn_from(self.reader, self._get(key), f"{key}.")

    def cobracket(self, key: str = "cobracket") -> Cobracket:
        n = self.dim
        cb = self._get(key)
        parts = [self.reader.sparse(cb.get(k, []), f"{key}.{k}", (n, n, n)) for k in ("succ", "prec")]
        return Cobracket(self.field, *parts)

    def tensor(self, key: str = "s", n: int | None = None) -> np.ndarray:
        n = self.dim if n is None else n
        return self.reader.sparse(self._get(key), key, (n, n))

    def matrix(self, key: str, shape=None) -> np.ndarray:
        return self.reader.matrix(self._get(key), key, shape)

    def scalar(self, key: str, default=None):
        if key not in self.raw:
            if default is None:
                raise DocumentError(f"{key}: missing")
            return self.field.scalar(default)
        return self.reader.coef(self.raw[key], key)

    def matched_pair(self) -> APNMatchedPair:
        first = _apn_from(self.reader, self._get("first"), "first.")
        second = _apn_from(self.reader, self._get("second"), "second.")
        rep1 = _apn_rep_from(self.reader, self._get("rep1"), "rep1", first.dim, second.dim)
        rep2 = _apn_rep_from(self.reader, self._get("rep2"), "rep2", second.dim, first.dim)
        return APNMatchedPair(first, second, rep1, rep2)


def _rep_dim(rep, where) -> int:
    if not isinstance(rep, dict):
        raise DocumentError(f"{where}: expected an object")
    m = rep.get("dim")
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DocumentError(f"{where}.dim: expected a non-negative integer")
    return m


def _apn_from(reader: Reader, raw: dict, prefix: str) -> APNAlgebra:
    if not isinstance(raw, dict):
        raise DocumentError(f"{prefix or 'document'}: expected an object")
    n = raw.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError(f"{prefix}dim: expected a non-negative integer")
    ops = raw.get("ops") or {}
    if "circ" in ops or "op" in ops:
        raise DocumentError(f"{prefix}ops: expected succ/prec, found a Novikov product")
    parts = [reader.sparse(ops.get(k, []), f"{prefix}ops.{k}", (n, n, n)) for k in ("succ", "prec")]
    return APNAlgebra(reader.field, *parts)


def _apn_rep_from(reader: Reader, rep, where: str, n: int, m: int | None = None) -> APNRep:
    if m is None or (isinstance(rep, dict) and "dim" in rep):
        declared = _rep_dim(rep, where)
        if m is not None and declared != m:
            raise DocumentError(f"{where}.dim: expected {m}, got {declared}")
        m = declared
    fams = [reader.family(rep.get(k), f"{where}.{k}", n, m) for k in APN_REP_KEYS]
    return APNRep(reader.field, *fams)


def load(path, field=None, params=None, coerce=False) -> Document:
    return Document(read_json(path), field, params, coerce)


# ---------------------------------------------------------------- writing


def field_json(F: Field) -> dict:
    return {"kind": "rational"} if F.is_rational else {"kind": "gf", "p": F.p}


def coef_json(F: Field, v):
    return F.fmt(v)


def sparse_json(F: Field, t: np.ndarray) -> list:
    t = F.reduce(t)
    return [[*map(int, idx), F.fmt(t[idx])] for idx in zip(*np.nonzero(t != 0))]


def matrix_json(F: Field, M: np.ndarray) -> list:
    return [[F.fmt(v) for v in row] for row in F.reduce(M).tolist()]


def apn_json(A: APNAlgebra) -> dict:
    F = A.field
    return {"field": field_json(F), "dim": A.dim,
            "ops": {"succ": sparse_json(F, A.succ), "prec": sparse_json(F, A.prec)}}


def novikov_json(N: NovikovAlgebra) -> dict:
    F = N.field
    return {"field": field_json(F), "dim": N.dim, "ops": {"circ": sparse_json(F, N.op)}}


def apn_rep_json(rep: APNRep) -> dict:
    F = rep.field
    out = {"dim": rep.dim}
    for k, fam in zip(APN_REP_KEYS, rep.maps()):
        out[k] = [matrix_json(F, M) for M in fam]
    return out


def novikov_rep_json(rep: NovikovRep) -> dict:
    F = rep.field
    return {"dim": rep.dim, "l": [matrix_json(F, M) for M in rep.l],
            "r": [matrix_json(F, M) for M in rep.r]}


def cobracket_json(delta: Cobracket) -> dict:
    F = delta.field
    return {"succ": sparse_json(F, delta.d_succ), "prec": sparse_json(F, delta.d_prec)}


def matched_pair_json(mp: APNMatchedPair) -> dict:
    def strip(A):
        return {k: v for k, v in apn_json(A).items() if k != "field"}
    return {"field": field_json(mp.A1.field), "first": strip(mp.A1), "second": strip(mp.A2),
            "rep1": apn_rep_json(mp.rep1), "rep2": apn_rep_json(mp.rep2)}


def save(obj) -> dict:
    """JSON document for a single object; load(save(x)) recovers x."""
    if isinstance(obj, APNAlgebra):
        return apn_json(obj)
    if isinstance(obj, NovikovAlgebra):
        return novikov_json(obj)
    if isinstance(obj, APNMatchedPair):
        return matched_pair_json(obj)
    raise TypeError(f"no document format for {type(obj).__name__}")


def dumps(doc) -> str:
    """Stable rendering: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True, default=_default) + "\n"


def _default(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, Fraction):
        return str(v)
    raise TypeError(f"not serialisable: {v!r}")
