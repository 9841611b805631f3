"""Pass/fail reports with concrete witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .exactlin import Field
from .multilinear import full


@dataclass(frozen=True)
class Witness:
    identity: str
    indices: tuple
    residual: tuple

    def to_json(self, field: Field) -> dict:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "residual": [field.fmt(v) for v in self.residual],
        }


@dataclass
class IdentityReport:
    field: Field
    checked: list = dc_field(default_factory=list)
    witnesses: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.passed

    def add(self, tag: str, residual, batch_shape: tuple) -> "IdentityReport":
        """Record one identity; nonzero residual slices become witnesses."""
        self.checked.append(tag)
        res = self.field.reduce(full(residual, batch_shape))
        flat = res.reshape(tuple(batch_shape) + (-1,))
        nz = np.any(flat != 0, axis=-1)
        for idx in zip(*np.nonzero(nz)):
            idx = tuple(int(i) for i in idx)
            self.witnesses.append(Witness(tag, idx, tuple(flat[idx].tolist())))
        return self

    def add_flag(self, tag: str, ok: bool, residual=()) -> "IdentityReport":
        self.checked.append(tag)
        if not ok:
            self.witnesses.append(Witness(tag, (), tuple(residual)))
        return self

    def extend(self, other: "IdentityReport", prefix: str = "") -> "IdentityReport":
        self.checked.extend(prefix + t for t in other.checked)
        for w in other.witnesses:
            self.witnesses.append(Witness(prefix + w.identity, w.indices, w.residual))
        return self

    def failed_identities(self) -> list[str]:
        seen = []
        for w in self.witnesses:
            if w.identity not in seen:
                seen.append(w.identity)
        return seen

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": list(self.checked),
            "witnesses": [w.to_json(self.field) for w in self.witnesses],
        }

    def __repr__(self) -> str:
        if self.passed:
            return f"IdentityReport(passed, {len(self.checked)} identities)"
        first = self.witnesses[0]
        return (f"IdentityReport(failed {self.failed_identities()}, "
                f"first witness {first.identity} at {first.indices})")
