"""The certification battery behind ``anncat selftest`` and the acceptance tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import make_zn, zn_bimodule
from .config import DEFAULT_CAPS, Caps
from .dual import (DualCategory, brute_force_dual_objects, build_dual_category, center, dual_object_laws,
                   enumerate_dual_objects, forgetful_functor, oracle_agreement)
from .fixtures import Functored, battery, strict_zn, twisted_z2z2
from .functor import check_functor, identity_functor
from .presentation import check_axioms, check_braiding, from_rm
from .report import to_json
from .search import SearchResult, candidate_presentation, search

__all__ = ["Criterion", "Suite", "CRITERIA", "run_all"]


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None

    @property
    def within_time(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_time

    def line(self) -> str:
        bound = f" (limit {self.limit:g} s)" if self.limit is not None else ""
        return (f"criterion {self.number} [{'PASS' if self.ok else 'FAIL'}] {self.name}: "
                f"{self.detail}; {self.seconds:.2f} s{bound}")

    def to_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.ok, "detail": self.detail,
                "limit_seconds": self.limit}


@dataclass
class Suite:
    """Shared state so later criteria reuse the search and the built duals."""

    caps: Caps = DEFAULT_CAPS
    _search: SearchResult | None = None
    _battery: list[Functored] | None = None
    _duals: dict[str, DualCategory] = field(default_factory=dict)

    def z2_search(self) -> SearchResult:
        if self._search is None:
            R = make_zn(2)
            self._search = search(R, zn_bimodule(R, 2), self.caps)
        return self._search

    def battery(self) -> list[Functored]:
        if self._battery is None:
            base = strict_zn(2)
            valid = [candidate_presentation(base, i) for i in self.z2_search().valid]
            self._battery = battery(self.caps, search_valid=valid)
        return self._battery

    def dual(self, fd: Functored) -> DualCategory:
        if fd.name not in self._duals:
            self._duals[fd.name] = build_dual_category(fd.A, fd.B, fd.F, self.caps)
        return self._duals[fd.name]


def _timed(number, name, limit, fn) -> Criterion:
    t = time.perf_counter()
    passed, detail = fn()
    return Criterion(number, name, passed, detail, time.perf_counter() - t, limit)


def criterion_1(s: Suite) -> Criterion:
    def run():
        bad = []
        for n in (1, 2, 3, 4, 6, 8):
            rep = check_axioms(strict_zn(n))
            if not rep.passed:
                bad.append(f"Z{n}: {[f.name for f in rep.failures]}")
        return not bad, "strict Z_n, n in {1,2,3,4,6,8}: " + ("all families pass" if not bad else "; ".join(bad))
    return _timed(1, "strictness suite", 10.0, run)


def criterion_2(s: Suite) -> Criterion:
    def run():
        bad, sizes = [], []
        for fd in s.battery():
            rep = check_axioms(s.dual(fd).presentation)
            sizes.append(f"{fd.name}:{len(s.dual(fd).objects)}")
            if not rep.passed:
                bad.append(f"{fd.name}: {[f.name for f in rep.failures]}")
        return not bad, f"{len(sizes)} duals certified ({', '.join(sizes)})" if not bad else "; ".join(bad)
    return _timed(2, "dual categories pass every axiom family", 60.0, run)


def criterion_3(s: Suite) -> Criterion:
    def run():
        bad, n = [], 0
        for fd in s.battery():
            if fd.F.src is not fd.F.dst:
                continue
            D, c = center(fd.A, s.caps)
            rep = check_braiding(D.presentation, c)
            n += 1
            if not rep.passed or not rep.family("braiding c(O, O) = id").passed:
                bad.append(f"{fd.A.name}: {[f.name for f in rep.failures]}")
        return not bad, f"{n} centers braided" if not bad else "; ".join(bad)
    return _timed(3, "centers pass every braiding family", 30.0, run)


def criterion_4(s: Suite) -> Criterion:
    def run():
        parts, ok = [], True
        twisted = twisted_z2z2()
        extra = [Functored("id(Z2xZ2,twisted)", twisted, twisted, identity_functor(twisted))]
        for fd in s.battery() + extra:
            oa = oracle_agreement(fd.A, fd.B, fd.F, s.caps)
            g = len(oa.guarded_discrepancies)
            ok = ok and g == 0
            parts.append(f"{fd.name}: {oa.agreed}/{oa.checked} agree, "
                         f"{len(oa.discrepancies) - g} unguarded and {g} guarded discrepancies")
        return ok, "; ".join(parts)
    return _timed(4, "closed form agrees with diagrams under the guard", None, run)


def criterion_5(s: Suite) -> Criterion:
    def run():
        bad, n = [], 0
        for fd in s.battery():
            for law, passed, witness in dual_object_laws(s.dual(fd).objects):
                n += 1
                if not passed:
                    bad.append(f"{fd.name}: {law} at {witness}")
        return not bad, f"{n} law checks pass" if not bad else "; ".join(bad)
    return _timed(5, "closure, group and monoid laws", None, run)


def criterion_6(s: Suite) -> Criterion:
    def run():
        bad = []
        for fd in s.battery():
            rep = check_functor(forgetful_functor(s.dual(fd)))
            if not rep.passed:
                bad.append(f"{fd.name}: {[f.name for f in rep.failures]}")
        return not bad, f"{len(s.battery())} forgetful functors pass" if not bad else "; ".join(bad)
    return _timed(6, "forgetful functors pass every functor family", None, run)


def criterion_7(s: Suite) -> Criterion:
    def run():
        msgs, ok = [], True
        A = strict_zn(2)
        F = identity_functor(A)
        expected = [(0, (0, 0)), (1, (0, 0))]
        got = [d.key() for d in enumerate_dual_objects(A, A, F, s.caps)]
        brute = [d.key() for d in brute_force_dual_objects(A, A, F, s.caps)]
        if got != expected or brute != expected:
            ok = False
            msgs.append(f"Z2: enumerated {got}, brute force {brute}")
        for n in range(1, 7):
            A = strict_zn(n)
            F = identity_functor(A)
            got = [d.key() for d in enumerate_dual_objects(A, A, F, s.caps)]
            want = [(r, (0,) * n) for r in range(n)]
            if got != want:
                ok = False
                msgs.append(f"Z{n}: {got}")
            if n <= 4 and [d.key() for d in brute_force_dual_objects(A, A, F, s.caps)] != want:
                ok = False
                msgs.append(f"Z{n}: brute force disagrees")
        return ok, "Z2 gives {(0,0),(1,0)}; Z_n gives n objects with u = 0 for n <= 6" if ok else "; ".join(msgs)
    return _timed(7, "known enumerations", None, run)


def criterion_8(s: Suite) -> Criterion:
    def run():
        R = make_zn(2)
        M = zn_bimodule(R, 2)
        base = from_rm(R, M)
        first = search(R, M, s.caps.override(workers=1))
        dumps = {to_json(first.to_dict(base)), to_json(s.z2_search().to_dict(base))}
        for w in (1, 2):
            dumps.add(to_json(search(R, M, s.caps.override(workers=w)).to_dict(base)))
        ok = first.candidates == 4096 and len(dumps) == 1
        return ok, (f"{first.candidates} candidates, {first.count} valid, "
                    f"{'byte-identical' if len(dumps) == 1 else 'DIFFERING'} across runs and worker counts")
    return _timed(8, "search determinism and scale", 60.0, run)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8]


def run_all(caps: Caps = DEFAULT_CAPS, suite: Suite | None = None) -> list[Criterion]:
    s = suite or Suite(caps)
    return [c(s) for c in CRITERIA]
