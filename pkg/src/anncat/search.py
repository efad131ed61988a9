"""Exhaustive search over constraint tables (lambda, eta) for a fixed (R, M).

Candidate ``i`` is decoded base |M|, most significant digit first: the first
|R|^3 digits are ``lam`` in row-major order, the remaining |R|^2 are ``eta``.
Candidates are checked in index order and chunk results are merged in index
order, so the report does not depend on the number of workers.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .algebra import Bimodule, FiniteRing
from .config import DEFAULT_CAPS, Caps
from .errors import ResourceRefusal
from .presentation import AnnPresentation, check_axioms, from_rm

__all__ = ["SearchResult", "search_space_size", "decode_candidate", "candidate_presentation", "search"]


@dataclass
class SearchResult:
    ring: str
    module: str
    candidates: int
    valid: list[int] = field(default_factory=list)
    # family name -> number of candidates it was the first to reject
    rejected_by: dict[str, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.valid)

    def to_dict(self, base: AnnPresentation | None = None) -> dict:
        d = {
            "ring": self.ring,
            "module": self.module,
            "candidates": self.candidates,
            "valid_count": self.count,
            "valid_indices": list(self.valid),
            "rejected_by": dict(sorted(self.rejected_by.items())),
        }
        if base is not None:
            reps = []
            for i in self.valid:
                lam, eta = decode_candidate(i, base.n_objects, base.n_labels)
                reps.append({"index": i, "lam": lam.tolist(), "eta": eta.tolist()})
            d["representatives"] = reps
        return d


def search_space_size(n_ring: int, n_module: int) -> int:
    return n_module ** (n_ring ** 3 + n_ring ** 2)


def decode_candidate(index: int, n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    k = n ** 3 + n ** 2
    digits = np.zeros(k, dtype=np.int64)
    for pos in range(k - 1, -1, -1):
        index, digits[pos] = divmod(index, m)
    return digits[: n ** 3].reshape(n, n, n), digits[n ** 3:].reshape(n, n)


def candidate_presentation(base: AnnPresentation, index: int) -> AnnPresentation:
    lam, eta = decode_candidate(index, base.n_objects, base.n_labels)
    lam.flags.writeable = False
    eta.flags.writeable = False
    return dataclasses.replace(base, lam=lam, eta=eta, name=f"{base.name}#{index}")


def _scan(base: AnnPresentation, start: int, stop: int) -> tuple[list[int], dict[str, int]]:
    valid, rejected = [], {}
    for i in range(start, stop):
        rep = check_axioms(candidate_presentation(base, i), fail_fast=True)
        if rep.passed:
            valid.append(i)
        else:
            name = rep.failures[0].name
            rejected[name] = rejected.get(name, 0) + 1
    return valid, rejected


def search(R: FiniteRing, M: Bimodule, caps: Caps = DEFAULT_CAPS, *, chunk: int = 256) -> SearchResult:
    """Every (lam, eta) on (R, M) passing all axiom families."""
    total = search_space_size(R.order, M.order)
    if total > caps.max_search:
        raise ResourceRefusal(f"(lambda, eta) search over {R.order}x{M.order} needs {total} "
                              f"candidates, cap is {caps.max_search}", total)
    base = from_rm(R, M)
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    if caps.workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=caps.workers) as pool:
            parts = list(pool.map(_scan, [base] * len(ranges), *zip(*ranges)))
    else:
        parts = [_scan(base, s, e) for s, e in ranges]
    out = SearchResult(R.name, M.name, total)
    for valid, rejected in parts:
        out.valid.extend(valid)
        for k, v in rejected.items():
            out.rejected_by[k] = out.rejected_by.get(k, 0) + v
    return out
