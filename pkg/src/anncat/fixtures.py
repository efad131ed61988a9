"""Built-in fixtures and the JSON fixture format.

Fixture documents are JSON objects with the top-level keys ``rings``,
``modules``, ``presentations``, ``functors`` and ``jobs`` (all optional,
``jobs`` is a list, the others map names to definitions).  Keys starting with
``_`` are ignored everywhere, so they can carry comments.  See
``docs/fixtures.md`` for the full format with a worked example.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .algebra import (Bimodule, FiniteRing, make_bimodule, make_group_hom, make_ring_hom,
                      make_table_ring, make_zn, product_ring, regular_bimodule, zn_bimodule)
from .config import DEFAULT_CAPS, Caps
from .errors import AnnCatError, FixtureError, ResourceRefusal
from .functor import AnnFunctor, identity_functor, make_functor, make_pq_functor
from .presentation import AnnPresentation, from_rm

__all__ = [
    "Functored",
    "strict_zn",
    "z4_on_z2",
    "reduction_z4_z2",
    "twisted_z2z2",
    "coboundary_functor_z3",
    "battery",
    "Fixture",
    "load_fixture",
    "parse_fixture",
    "JOB_KINDS",
]


@dataclass(frozen=True, eq=False)
class Functored:
    """A named functor ``F: B -> A`` with its endpoints."""

    name: str
    A: AnnPresentation
    B: AnnPresentation
    F: AnnFunctor


def strict_zn(n: int) -> AnnPresentation:
    R = make_zn(n)
    return from_rm(R, zn_bimodule(R, n) if n > 1 else regular_bimodule(R), name=f"(Z{n},Z{n})")


def z4_on_z2() -> AnnPresentation:
    R = make_zn(4)
    return from_rm(R, zn_bimodule(R, 2), name="(Z4,Z2)")


def reduction_z4_z2() -> Functored:
    """Reduction mod 2 from strict (Z4, Z4) to strict (Z2, Z2)."""
    B, A = strict_zn(4), strict_zn(2)
    Z4, Z2 = make_zn(4), make_zn(2)
    red = [0, 1, 0, 1]
    F = make_pq_functor(B, A, make_ring_hom(Z4, Z2, red), make_group_hom(Z4.group, Z2.group, red),
                        name="reduce")
    return Functored("reduce(Z4->Z2)", A, B, F)


def twisted_z2z2() -> AnnPresentation:
    """Strict (Z2 x Z2, Z2 x Z2) where the idempotents act by swapped coordinates.

    ``(a, b)`` acts on the left by ``diag(a, b)`` and on the right by
    ``diag(b, a)``, so only 0 and 1 act centrally.
    """
    Z2 = make_zn(2)
    R = product_ring(Z2, Z2)
    pairs = list(itertools.product(range(2), repeat=2))
    idx = {p: i for i, p in enumerate(pairs)}
    add = [[idx[((p[0] + q[0]) % 2, (p[1] + q[1]) % 2)] for q in pairs] for p in pairs]
    lact = [[idx[(x[0] * m[0], x[1] * m[1])] for m in pairs] for x in pairs]
    ract = [[idx[(x[1] * m[0], x[0] * m[1])] for m in pairs] for x in pairs]
    M = make_bimodule(R, add, 0, lact, ract, name="Z2xZ2~")
    return from_rm(R, M, name="(Z2xZ2,twisted)")


def coboundary_functor_z3() -> Functored:
    """Identity-on-objects endofunctor of strict (Z3, Z3) with nonzero mu.

    The structure labels are the coboundary of ``f = (0, 0, 1)``:
    ``mu(x,y) = f(x) + f(y) - f(x+y)`` and ``nu(x,y) = f(x) y + x f(y) - f(xy)``.
    """
    A = strict_zn(3)
    f = np.array([0, 0, 1])
    x, y = np.ix_(range(3), range(3))
    mu = (f[x] + f[y] - f[(x + y) % 3]) % 3
    nu = (f[x] * y + x * f[y] - f[(x * y) % 3]) % 3
    F = make_functor(A, A, np.arange(3), np.arange(3), mu, nu, name="twist")
    return Functored("coboundary(Z3)", A, A, F)


def battery(caps: Caps = DEFAULT_CAPS, *, search_valid: list[AnnPresentation] | None = None) -> list[Functored]:
    """Functored fixtures certified by the self-test.

    Strict Z2, Z3, Z4 and Z4 acting on Z2 with the identity functor, every
    valid (lambda, eta) on (Z2, Z2) (pass ``search_valid`` to reuse a search),
    and the reduction functor Z4 -> Z2.
    """
    from .search import candidate_presentation, search

    pres = [strict_zn(2), strict_zn(3), strict_zn(4), z4_on_z2()]
    if search_valid is None:
        R = make_zn(2)
        res = search(R, zn_bimodule(R, 2), caps)
        base = pres[0]
        search_valid = [candidate_presentation(base, i) for i in res.valid]
    pres.extend(search_valid)
    out = [Functored(f"id{P.name}", P, P, identity_functor(P)) for P in pres]
    out.append(reduction_z4_z2())
    return out


# JSON fixtures
# -------------

JOB_KINDS = ("validate", "dual", "center", "search")


@dataclass
class Fixture:
    rings: dict[str, FiniteRing] = field(default_factory=dict)
    modules: dict[str, Bimodule] = field(default_factory=dict)
    presentations: dict[str, AnnPresentation] = field(default_factory=dict)
    functors: dict[str, AnnFunctor] = field(default_factory=dict)
    jobs: list[dict] = field(default_factory=list)

    def functored(self, name: str) -> Functored:
        if name not in self.functors:
            raise FixtureError(f"functors: no functor named {name!r} (have {sorted(self.functors)})")
        F = self.functors[name]
        return Functored(name, F.dst, F.src, F)


def _entries(doc: dict, key: str) -> list[tuple[str, Any]]:
    section = doc.get(key, {})
    if not isinstance(section, dict):
        raise FixtureError(f"{key}: expected an object mapping names to definitions")
    return [(k, v) for k, v in section.items() if not k.startswith("_")]


def _need(defn: dict, key: str, where: str):
    if not isinstance(defn, dict):
        raise FixtureError(f"{where}: expected an object")
    if key not in defn:
        raise FixtureError(f"{where}.{key}: missing field")
    return defn[key]


def _table(value, shape: tuple[int, ...], where: str, fill: int = 0) -> np.ndarray:
    if value == "zero":
        return np.full(shape, fill, dtype=np.int64)
    try:
        arr = np.array(value, dtype=np.int64)
    except (ValueError, TypeError, OverflowError):
        raise FixtureError(f"{where}: not a rectangular integer table") from None
    if arr.shape != shape:
        raise FixtureError(f"{where}: expected shape {list(shape)}, found {list(arr.shape)}")
    return arr


def _ref(table: dict, name, kind: str, where: str):
    if not isinstance(name, str) or name not in table:
        raise FixtureError(f"{where}: unknown {kind} {name!r}")
    return table[name]


def _wrap(where: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ResourceRefusal:
        raise
    except FixtureError:
        raise
    except AnnCatError as exc:
        raise FixtureError(f"{where}: {exc}") from exc


def _ring(name: str, d, caps: Caps) -> FiniteRing:
    where = f"rings.{name}"
    if isinstance(d, dict) and "zn" in d:
        n = d["zn"]
        if not isinstance(n, int):
            raise FixtureError(f"{where}.zn: expected an integer")
        if n > caps.max_ring:
            raise ResourceRefusal(f"{where}: ring of order {n} exceeds cap {caps.max_ring}", n)
        return _wrap(where, make_zn, n)
    add = _need(d, "add", where)
    n = len(add) if isinstance(add, list) else 0
    add = _table(add, (n, n), f"{where}.add")
    mul = _table(_need(d, "mul", where), (n, n), f"{where}.mul")
    return _wrap(where, make_table_ring, add, mul, d.get("zero", 0), d.get("one", 1),
                 name=name, max_size=caps.max_ring)


def _module(name: str, d, rings: dict, caps: Caps) -> Bimodule:
    where = f"modules.{name}"
    R = _ref(rings, _need(d, "ring", where), "ring", f"{where}.ring")
    if d.get("regular"):
        M = _wrap(where, regular_bimodule, R)
        return Bimodule(M.base, M.group, M.lact, M.ract, name)
    if "zn" in d:
        m = d["zn"]
        if not isinstance(m, int) or m < 1:
            raise FixtureError(f"{where}.zn: expected a positive integer")
        if m > caps.max_module:
            raise ResourceRefusal(f"{where}: module of order {m} exceeds cap {caps.max_module}", m)
        M = _wrap(where, zn_bimodule, R, m)
        return Bimodule(M.base, M.group, M.lact, M.ract, name)
    add = _need(d, "add", where)
    m = len(add) if isinstance(add, list) else 0
    add = _table(add, (m, m), f"{where}.add")
    lact = _table(_need(d, "lact", where), (R.order, m), f"{where}.lact")
    ract = _table(_need(d, "ract", where), (R.order, m), f"{where}.ract")
    return _wrap(where, make_bimodule, R, add, d.get("zero", 0), lact, ract, name=name,
                 max_size=caps.max_module)


def _presentation(name: str, d, fx: Fixture) -> AnnPresentation:
    where = f"presentations.{name}"
    R = _ref(fx.rings, _need(d, "ring", where), "ring", f"{where}.ring")
    M = _ref(fx.modules, _need(d, "module", where), "module", f"{where}.module")
    n = R.order
    lam = _table(d.get("lam", "zero"), (n, n, n), f"{where}.lam", M.zero)
    eta = _table(d.get("eta", "zero"), (n, n), f"{where}.eta", M.zero)
    return _wrap(where, from_rm, R, M, lam, eta, name=name)


def _functor(name: str, d, fx: Fixture) -> AnnFunctor:
    where = f"functors.{name}"
    if isinstance(d, dict) and "identity" in d:
        P = _ref(fx.presentations, d["identity"], "presentation", f"{where}.identity")
        F = identity_functor(P)
        return AnnFunctor(F.src, F.dst, F.omap, F.lmap, F.mu, F.nu, name)
    B = _ref(fx.presentations, _need(d, "source", where), "presentation", f"{where}.source")
    A = _ref(fx.presentations, _need(d, "target", where), "presentation", f"{where}.target")
    n = B.n_objects
    p = _table(_need(d, "p", where), (n,), f"{where}.p")
    q = _table(_need(d, "q", where), (B.n_labels,), f"{where}.q")
    mu = _table(d.get("mu", "zero"), (n, n), f"{where}.mu", A.labels.zero)
    nu = _table(d.get("nu", "zero"), (n, n), f"{where}.nu", A.labels.zero)
    return _wrap(where, make_functor, B, A, p, q, mu, nu, name=name)


def _job(i: int, d, fx: Fixture) -> dict:
    where = f"jobs[{i}]"
    kind = _need(d, "kind", where)
    if kind not in JOB_KINDS:
        raise FixtureError(f"{where}.kind: expected one of {list(JOB_KINDS)}, found {kind!r}")
    if kind == "dual":
        _ref(fx.functors, _need(d, "functor", where), "functor", f"{where}.functor")
    if kind == "center" and "presentation" in d:
        _ref(fx.presentations, d["presentation"], "presentation", f"{where}.presentation")
    if kind == "search":
        _ref(fx.rings, _need(d, "ring", where), "ring", f"{where}.ring")
        _ref(fx.modules, _need(d, "module", where), "module", f"{where}.module")
    return {k: v for k, v in d.items() if not k.startswith("_")}


def parse_fixture(doc: Any, caps: Caps = DEFAULT_CAPS) -> Fixture:
    if not isinstance(doc, dict):
        raise FixtureError("fixture: top level must be a JSON object")
    known = {"rings", "modules", "presentations", "functors", "jobs"}
    extra = sorted(k for k in doc if k not in known and not k.startswith("_"))
    if extra:
        raise FixtureError(f"fixture: unknown top-level keys {extra}")
    fx = Fixture()
    for name, d in _entries(doc, "rings"):
        fx.rings[name] = _ring(name, d, caps)
    for name, d in _entries(doc, "modules"):
        fx.modules[name] = _module(name, d, fx.rings, caps)
    for name, d in _entries(doc, "presentations"):
        fx.presentations[name] = _presentation(name, d, fx)
    for name, d in _entries(doc, "functors"):
        fx.functors[name] = _functor(name, d, fx)
    jobs = doc.get("jobs", [])
    if not isinstance(jobs, list):
        raise FixtureError("jobs: expected a list")
    fx.jobs = [_job(i, d, fx) for i, d in enumerate(jobs)]
    return fx


def load_fixture(path: str, caps: Caps = DEFAULT_CAPS) -> Fixture:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FixtureError(f"{path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_fixture(doc, caps)
