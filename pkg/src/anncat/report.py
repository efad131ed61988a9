"""Job runners that turn constructions into plain report dictionaries.

Reports contain only JSON-native values built in a fixed order, so dumping
them is deterministic.  Wall-clock time is kept out of the job dictionaries
and collected separately under ``timing``.
"""

from __future__ import annotations

import json
import time
from typing import Callable

from .algebra import FiniteRing
from .config import DEFAULT_CAPS, Caps
from .dual import DualCategory, build_dual_category, center, dual_object_laws, forgetful_functor, oracle_agreement
from .errors import InternalInconsistency, ResourceRefusal
from .fixtures import Fixture, Functored
from .functor import check_functor
from .presentation import AnnPresentation, check_axioms, check_braiding, from_rm, pi0, pi1
from .search import search

PASS, FAIL, REFUSED = "pass", "fail", "refused"

__all__ = ["PASS", "FAIL", "REFUSED", "ring_summary", "run_validate", "run_dual", "run_center",
           "run_search", "run_jobs", "timed", "exit_code", "to_json", "to_text"]


def ring_summary(R: FiniteRing) -> dict:
    return {
        "order": R.order,
        "commutative": bool(R.is_commutative()),
        "zero": int(R.zero),
        "one": int(R.one),
        "add": R.add.tolist(),
        "mul": R.mul.tolist(),
    }


def _refused(kind: str, exc: ResourceRefusal, **extra) -> dict:
    return {"kind": kind, **extra, "status": REFUSED, "reason": str(exc), "estimate": exc.estimate}


def run_validate(fx: Fixture) -> dict:
    pres = []
    for name, P in fx.presentations.items():
        pres.append({"name": name, "report": check_axioms(P).to_dict()})
    funs = []
    for name, F in fx.functors.items():
        funs.append({"name": name, "report": check_functor(F).to_dict()})
    ok = all(p["report"]["passed"] for p in pres) and all(f["report"]["passed"] for f in funs)
    return {
        "kind": "validate",
        "rings": sorted(fx.rings),
        "modules": sorted(fx.modules),
        "presentations": pres,
        "functors": funs,
        "status": PASS if ok else FAIL,
    }


def _serialize_dual(D: DualCategory) -> dict:
    P = D.presentation
    return {
        "objects": [{"r": d.r, "u": list(d.u)} for d in D.objects],
        "labels": list(D.label_elems),
        "zero": int(P.zero),
        "one": int(P.one),
        "oplus": P.oplus.tolist(),
        "otimes": P.otimes.tolist(),
    }


def _certify(D: DualCategory, caps: Caps) -> tuple[dict, bool]:
    axioms = check_axioms(D.presentation)
    laws = dual_object_laws(D.objects)
    forget = check_functor(forgetful_functor(D))
    out = {
        "axioms": axioms.to_dict(),
        "laws": [{"law": n, "passed": p, "witness": None if w is None else list(w)} for n, p, w in laws],
        "forgetful_functor": forget.to_dict(),
    }
    ok = axioms.passed and all(p for _, p, _ in laws) and forget.passed
    try:
        oa = oracle_agreement(D.A, D.B, D.functor, caps)
        out["oracle_agreement"] = oa.to_dict()
        ok = ok and oa.passed
    except ResourceRefusal as exc:
        out["oracle_agreement"] = {"status": REFUSED, "reason": str(exc), "estimate": exc.estimate}
    if axioms.passed:
        out["pi0"] = ring_summary(pi0(D.presentation, axioms))
        M = pi1(D.presentation, axioms)
        out["pi1"] = {"order": M.order, "elements_in_target": list(D.label_elems)}
    return out, ok


def _inputs_ok(fd: Functored) -> dict | None:
    reports = {}
    for role, rep in (("target", check_axioms(fd.A)), ("source", check_axioms(fd.B)),
                      ("functor", check_functor(fd.F))):
        if not rep.passed:
            reports[role] = rep.to_dict()
    return reports or None


def run_dual(fd: Functored, caps: Caps = DEFAULT_CAPS) -> dict:
    head = {"kind": "dual", "functor": fd.name, "source": fd.B.name, "target": fd.A.name}
    bad = _inputs_ok(fd)
    if bad:
        return {**head, "status": FAIL, "reason": "inputs fail their axiom checks", "input_reports": bad}
    try:
        D = build_dual_category(fd.A, fd.B, fd.F, caps)
    except ResourceRefusal as exc:
        return _refused("dual", exc, **{k: v for k, v in head.items() if k != "kind"})
    except InternalInconsistency as exc:
        return {**head, "status": FAIL, "reason": str(exc)}
    cert, ok = _certify(D, caps)
    return {**head, "object_count": len(D.objects), "dual": _serialize_dual(D),
            "certification": cert, "status": PASS if ok else FAIL}


def run_center(name: str, P: AnnPresentation, caps: Caps = DEFAULT_CAPS) -> dict:
    head = {"kind": "center", "presentation": name}
    rep = check_axioms(P)
    if not rep.passed:
        return {**head, "status": FAIL, "reason": "presentation fails its axiom checks",
                "input_reports": {"presentation": rep.to_dict()}}
    try:
        D, c = center(P, caps)
    except ResourceRefusal as exc:
        return _refused("center", exc, presentation=name)
    except InternalInconsistency as exc:
        return {**head, "status": FAIL, "reason": str(exc)}
    cert, ok = _certify(D, caps)
    braid = check_braiding(D.presentation, c)
    cert["braiding"] = braid.to_dict()
    ser = _serialize_dual(D)
    ser["braiding"] = c.tolist()
    return {**head, "object_count": len(D.objects), "center": ser, "certification": cert,
            "status": PASS if ok and braid.passed else FAIL}


def run_search(fx: Fixture, ring: str, module: str, caps: Caps = DEFAULT_CAPS) -> dict:
    R, M = fx.rings[ring], fx.modules[module]
    try:
        res = search(R, M, caps)
    except ResourceRefusal as exc:
        return _refused("search", exc, ring=ring, module=module)
    d = res.to_dict(from_rm(R, M))
    d["ring"], d["module"] = ring, module
    return {"kind": "search", **d, "status": PASS}


def timed(fn: Callable[[], dict]) -> tuple[dict, float]:
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def run_jobs(fx: Fixture, caps: Caps = DEFAULT_CAPS) -> tuple[list[dict], list[float]]:
    jobs, times = [], []
    for job in fx.jobs:
        kind = job["kind"]
        if kind == "validate":
            fn = lambda: run_validate(fx)
        elif kind == "dual":
            fn = lambda: run_dual(fx.functored(job["functor"]), caps)
        elif kind == "center":
            names = [job["presentation"]] if "presentation" in job else list(fx.presentations)
            fn = lambda: _center_group(fx, names, caps)
        else:
            fn = lambda: run_search(fx, job["ring"], job["module"], caps)
        out, dt = timed(fn)
        jobs.append(out)
        times.append(dt)
    return jobs, times


def _center_group(fx: Fixture, names: list[str], caps: Caps) -> dict:
    parts = [run_center(n, fx.presentations[n], caps) for n in names]
    return {"kind": "centers", "centers": parts, "status": _aggregate(parts)}


def _aggregate(jobs: list[dict]) -> str:
    states = [j["status"] for j in jobs]
    if FAIL in states:
        return FAIL
    if REFUSED in states:
        return REFUSED
    return PASS


def exit_code(jobs: list[dict]) -> int:
    return {PASS: 0, FAIL: 1, REFUSED: 3}[_aggregate(jobs)]


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _scalar(v) -> str:
    return json.dumps(v)


def _lines(value, indent: int) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                sub = _lines(v, indent + 1)
                out.append(f"{pad}- {sub[0].lstrip()}")
                out.extend(sub[1:])
            else:
                out.append(f"{pad}- {_scalar(v)}")
    else:
        out.append(pad + _scalar(value))
    return out


def _flat(v) -> bool:
    """Lists of scalars, or of lists of scalars, print on one line."""
    if isinstance(v, list):
        return all(not isinstance(x, dict) and (not isinstance(x, list) or _flat(x)) for x in v)
    return False


def to_text(report: dict) -> str:
    """Indented rendering carrying exactly the data of :func:`to_json`."""
    return "\n".join(_lines(report, 0)) + "\n"
