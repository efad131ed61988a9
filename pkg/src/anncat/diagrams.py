"""Exhaustive evaluation of commutative-diagram families.

A family is a pair of paths between the same two objects, parameterised by a
tuple of object and label variables.  Paths are built by folding
``compose``/``oplus_mor``/``otimes_mor`` over labelled morphisms, so the engine
only ever compares the two resulting labels.  Variables are numpy index
arrays: one call evaluates a whole block of tuples at once.

Blocks are visited in lexicographic order, so the first witness of a failing
family is the lexicographically smallest failing tuple.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .algebra import first_violation
from .errors import CompositionError

BLOCK = 1 << 18


@dataclass(frozen=True)
class Morphism:
    """Endomorphism ``obj -> obj`` with label in the hom label group.

    Fields may hold numpy arrays, in which case the morphism stands for a
    whole block of morphisms evaluated together.
    """

    obj: Any
    label: Any


@dataclass(frozen=True)
class Family:
    name: str
    group: str
    variables: tuple[str, ...]
    kinds: tuple[str, ...]
    paths: Callable[..., tuple[Morphism, Morphism]]
    doc: str = ""


@dataclass
class FamilyResult:
    name: str
    group: str
    passed: bool
    checked: int
    variables: tuple[str, ...] = ()
    witness: tuple[int, ...] | None = None
    lhs: int | None = None
    rhs: int | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "group": self.group,
            "passed": self.passed,
            "checked": self.checked,
        }
        if not self.passed:
            d["variables"] = list(self.variables)
            d["witness"] = None if self.witness is None else list(self.witness)
            d["lhs"] = self.lhs
            d["rhs"] = self.rhs
            if self.detail:
                d["detail"] = self.detail
        return d


@dataclass
class AxiomReport:
    subject: str
    families: list[FamilyResult] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    @property
    def failures(self) -> list[FamilyResult]:
        return [f for f in self.families if not f.passed]

    def family(self, name: str) -> FamilyResult:
        for f in self.families:
            if f.name == name:
                return f
        raise KeyError(name)

    def in_group(self, group: str) -> list[FamilyResult]:
        return [f for f in self.families if f.group == group]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "families": [f.to_dict() for f in self.families],
            "notes": self.notes,
        }

    def summary(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for f in self.families:
            mark = "ok  " if f.passed else "FAIL"
            line = f"  {mark} [{f.group}] {f.name} ({f.checked} tuples)"
            if not f.passed:
                wit = dict(zip(f.variables, f.witness)) if f.witness is not None else None
                line += f" witness={wit} lhs={f.lhs} rhs={f.rhs}"
                if f.detail:
                    line += f" ({f.detail})"
            lines.append(line)
        return "\n".join(lines)


def same_object(x, y) -> None:
    if not np.array_equal(np.broadcast_to(x, np.broadcast(x, y).shape),
                          np.broadcast_to(y, np.broadcast(x, y).shape)):
        raise CompositionError("morphisms with different objects cannot be composed")


def _split(dims: Sequence[int]) -> int:
    """Number of leading dimensions to loop over in Python."""
    for s in range(len(dims) + 1):
        if math.prod(dims[s:]) <= BLOCK:
            return s
    return len(dims)


def evaluate(family: Family, ctx, sizes: dict[str, int]) -> FamilyResult:
    dims = [sizes[k] for k in family.kinds]
    total = math.prod(dims)
    result = FamilyResult(family.name, family.group, True, total, family.variables)
    if total == 0:
        return result
    s = _split(dims)
    trailing = dims[s:]
    grid = tuple(np.indices(trailing)) if trailing else ()
    shape = tuple(trailing)
    for lead in itertools.product(*(range(d) for d in dims[:s])):
        try:
            lhs, rhs = family.paths(ctx, *lead, *grid)
        except CompositionError as exc:
            result.passed = False
            result.detail = str(exc)
            return result
        bad = (np.asarray(lhs.obj) != np.asarray(rhs.obj)) | (np.asarray(lhs.label) != np.asarray(rhs.label))
        bad = np.broadcast_to(bad, shape)
        hit = first_violation(bad)
        if hit is not None:
            result.passed = False
            result.witness = tuple(int(v) for v in lead) + hit
            result.lhs = int(np.broadcast_to(lhs.label, shape)[hit])
            result.rhs = int(np.broadcast_to(rhs.label, shape)[hit])
            if np.broadcast_to(np.asarray(lhs.obj) != np.asarray(rhs.obj), shape)[hit]:
                result.detail = "paths end at different objects"
            return result
    return result


def reevaluate(family: Family, ctx, witness: Sequence[int]) -> tuple[int, int]:
    """Labels of both paths at a single tuple."""
    lhs, rhs = family.paths(ctx, *(int(w) for w in witness))
    return int(lhs.label), int(rhs.label)


def run_families(subject: str, families: Sequence[Family], ctx, sizes: dict[str, int],
                 fail_fast: bool = False) -> AxiomReport:
    report = AxiomReport(subject)
    for fam in families:
        res = evaluate(fam, ctx, sizes)
        report.families.append(res)
        if fail_fast and not res.passed:
            break
    return report
