"""Dual Ann-category of a functored presentation, and the center.

An object of the dual of ``F: B -> A`` is a pair ``(r, u)``: an object r of A
and a table ``u`` over the objects X of B, where ``u[X]`` labels the morphism
``r F(X) -> F(X) r``.  Membership is decided by evaluating the defining
diagrams (``membership_report``); the closed-form conditions for type (R, M)
are kept alongside as an independent filter and as a probe of those formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .diagrams import AxiomReport, Family, Morphism, run_families, same_object
from .errors import InternalInconsistency, ResourceRefusal, StructureError
from .functor import AnnFunctor, identity_functor, make_functor
from .presentation import AnnPresentation, make_presentation

__all__ = [
    "DualObject",
    "DualCategory",
    "MEMBERSHIP_FAMILIES",
    "membership_report",
    "is_dual_object_diagrammatic",
    "SUM",
    "COMMUTATOR",
    "closed_form_conditions",
    "centralizes_label_image",
    "is_dual_object_closed_form",
    "object_centralizer",
    "label_centralizer",
    "enumerate_dual_objects",
    "brute_force_dual_objects",
    "dual_sum",
    "dual_product",
    "dual_negate",
    "dual_zero",
    "dual_one",
    "build_dual_category",
    "center",
    "forgetful_functor",
    "dual_object_laws",
    "Discrepancy",
    "OracleAgreement",
    "oracle_agreement",
]


@dataclass(frozen=True, order=True)
class DualObject:
    r: int
    u: tuple[int, ...]
    functor: AnnFunctor | None = field(default=None, compare=False, repr=False, hash=False)

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.r, self.u)

    def __str__(self) -> str:
        return f"({self.r}, {list(self.u)})"


def _check_fixture(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor) -> None:
    if F.src is not B or F.dst is not A:
        raise StructureError("functor does not map B to A")


def _same_fixture(*ds: DualObject) -> AnnFunctor:
    F = ds[0].functor
    if F is None or any(d.functor is not F for d in ds):
        raise StructureError("dual objects belong to different functored categories")
    return F


# Diagrammatic membership
# -----------------------


@dataclass(frozen=True, eq=False)
class _Module:
    F: AnnFunctor
    r: int
    u: np.ndarray

    def uarr(self, X) -> Morphism:
        A, FX = self.F.dst, self.F.omap[X]
        src = A.otimes[self.r, FX]
        same_object(src, A.otimes[FX, self.r])
        return Morphism(src, self.u[X])


def _u_unit(m: _Module):
    A = m.F.dst
    return m.uarr(m.F.src.one), A.identity(m.r)


def _u_typed(m: _Module, X):
    A, FX = m.F.dst, m.F.omap[X]
    return A.identity(A.otimes[m.r, FX]), A.identity(A.otimes[FX, m.r])


def _u_sum(m: _Module, X, Y):
    # r(FX + FY) -> F(X + Y) r
    F, A, r = m.F, m.F.dst, m.r
    FX, FY = F.omap[X], F.omap[Y]
    lhs = A.seq(A.dist_left(r, FX, FY),
                A.oplus_mor(m.uarr(X), m.uarr(Y)),
                A.inverse(A.dist_right(FX, FY, r)),
                A.otimes_mor(F.breve(X, Y), A.identity(r)))
    rhs = A.seq(A.otimes_mor(A.identity(r), F.breve(X, Y)),
                m.uarr(F.src.oplus[X, Y]))
    return lhs, rhs


def _u_product(m: _Module, X, Y):
    # r(FX FY) -> F(XY) r
    F, A, r = m.F, m.F.dst, m.r
    FX, FY = F.omap[X], F.omap[Y]
    lhs = A.seq(A.otimes_mor(m.uarr(X), A.identity(FY)),
                A.otimes_mor(A.identity(FX), m.uarr(Y)),
                A.otimes_mor(F.tilde(X, Y), A.identity(r)))
    rhs = A.seq(A.otimes_mor(A.identity(r), F.tilde(X, Y)),
                m.uarr(F.src.otimes[X, Y]))
    return lhs, rhs


def _u_natural(m: _Module, X, b):
    F, A, r = m.F, m.F.dst, m.r
    Ff = F(F.src.mor(X, b))
    lhs = A.seq(A.otimes_mor(A.identity(r), Ff), m.uarr(X))
    rhs = A.seq(m.uarr(X), A.otimes_mor(Ff, A.identity(r)))
    return lhs, rhs


MEMBERSHIP_FAMILIES: list[Family] = [
    Family("u_{A,X} well-typed (rFX = FXr)", "module", ("X",), ("obj",), _u_typed),
    Family("u_{A,I} = id", "module", (), (), _u_unit),
    Family("diagram (+): compatible with F-breve", "module", ("X", "Y"), ("obj", "obj"), _u_sum),
    Family("diagram (x): compatible with F-tilde", "module", ("X", "Y"), ("obj", "obj"), _u_product),
    Family("u natural in X", "module", ("X", "b"), ("obj", "label"), _u_natural),
]


def membership_report(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor, r: int,
                      u: Sequence[int], *, fail_fast: bool = False) -> AxiomReport:
    _check_fixture(A, B, F)
    u = np.asarray(u, dtype=np.int64)
    if u.shape != (B.n_objects,) or (u.size and (u.min() < 0 or u.max() >= A.n_labels)):
        raise StructureError("u must be a table over the objects of B with labels in A")
    ctx = _Module(F, int(r), u)
    sizes = {"obj": B.n_objects, "label": B.n_labels}
    report = run_families(f"({r}, {list(map(int, u))})", MEMBERSHIP_FAMILIES[:1], ctx, sizes)
    if not report.passed:
        return report
    rest = run_families(report.subject, MEMBERSHIP_FAMILIES[1:], ctx, sizes, fail_fast=fail_fast)
    report.families.extend(rest.families)
    return report


def is_dual_object_diagrammatic(A, B, F, r, u) -> bool:
    return membership_report(A, B, F, r, u, fail_fast=True).passed


# Closed-form membership for type (R, M)
# --------------------------------------

SUM = "sum"
COMMUTATOR = "commutator"


def closed_form_conditions(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor, r: int,
                           u: Sequence[int], *, convention: str = SUM) -> dict[str, bool]:
    """The four closed-form conditions, each evaluated at every (x, y).

    With ``convention="sum"`` (the default) the additive condition uses
    ``mu(x,y) r + r mu(x,y)``; ``"commutator"`` uses ``r mu(x,y) - mu(x,y) r``,
    which is what the (+)-diagram itself produces.  Actions of x on u-values go through F.
    """
    _check_fixture(A, B, F)
    u = np.asarray(u, dtype=np.int64)
    N = A.labels
    add, neg = N.add, N.neg
    p = F.omap
    n = B.n_objects
    x, y = np.ix_(range(n), range(n))
    px, py = p[x], p[y]
    mu, nu = F.mu[x, y], F.nu[x, y]
    out = {
        "u(r, 1) = 0": bool(u[B.one] == N.zero),
        "r p(x) = p(x) r": bool(np.all(A.otimes[r, p] == A.otimes[p, r])),
    }
    # u(x) - u(x+y) + u(y)  ==  mu r + r mu - lambda(r, px, py)
    left = add[add[u[x], neg[u[B.oplus[x, y]]]], u[y]]
    if convention == SUM:
        mu_term = add[A.ract[r, mu], A.lact[r, mu]]
    elif convention == COMMUTATOR:
        mu_term = add[A.lact[r, mu], neg[A.ract[r, mu]]]
    else:
        raise ValueError(f"unknown convention {convention!r}")
    right = add[mu_term, neg[A.lam[r, px, py]]]
    out["additive (mu r + r mu - lambda)" if convention == SUM
        else "additive (r mu - mu r - lambda)"] = bool(np.all(left == right))
    # x u(y) - u(xy) + u(x) y  ==  r nu - nu r
    left = add[add[A.lact[px, u[y]], neg[u[B.otimes[x, y]]]], A.ract[py, u[x]]]
    right = add[A.lact[r, nu], neg[A.ract[r, nu]]]
    out["multiplicative (r nu - nu r)"] = bool(np.all(left == right))
    return out


def is_dual_object_closed_form(A, B, F, r, u, *, convention: str = SUM) -> bool:
    return all(closed_form_conditions(A, B, F, r, u, convention=convention).values())


# Enumeration
# -----------


def object_centralizer(A: AnnPresentation, F: AnnFunctor) -> list[int]:
    """Objects r of A with r F(X) = F(X) r for every X."""
    p = F.omap
    return [r for r in range(A.n_objects) if np.array_equal(A.otimes[r, p], A.otimes[p, r])]


def label_centralizer(A: AnnPresentation, F: AnnFunctor) -> list[int]:
    """Labels a with F(X).a = a.F(X) for every X: the hom labels of the dual."""
    p = np.unique(F.omap)
    return [a for a in range(A.n_labels) if np.array_equal(A.lact[p, a], A.ract[p, a])]


def _sum_defect(A: AnnPresentation, F: AnnFunctor, r: int) -> np.ndarray:
    """k[x, y] with u(x + y) = u(x) + u(y) + k[x, y] for every member u at r."""
    N = A.labels
    n = F.src.n_objects
    x, y = np.ix_(range(n), range(n))
    mu = F.mu[x, y]
    k = N.add[A.lam[r, F.omap[x], F.omap[y]], A.ract[r, mu]]
    return N.sub(k, A.lact[r, mu])


def _propagate(B: AnnPresentation, N, k: np.ndarray, gens: list[int], values: Sequence[int]) -> tuple | None:
    u = {B.zero: int(N.neg[k[B.zero, B.zero]])}
    for g, v in zip(gens, values):
        if g in u and u[g] != v:
            return None
        u[g] = int(v)
    seen = {B.zero}
    queue = [B.zero]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = int(B.oplus[x, g])
            val = int(N.add[N.add[u[x], u[g]], k[x, g]])
            if y in u and u[y] != val:
                return None
            u[y] = val
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(u) != B.n_objects:
        return None
    return tuple(u[x] for x in range(B.n_objects))


def enumerate_dual_objects(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor,
                           caps: Caps = DEFAULT_CAPS) -> list[DualObject]:
    """All dual objects, sorted by (r, u).

    u is fixed by its values on an additive generating set of B's objects
    (with u(I) = 0 seeded), through the (+)-diagram recurrence; every
    propagated candidate is then confirmed diagrammatically.
    """
    _check_fixture(A, B, F)
    N = A.labels
    rs = object_centralizer(A, F)
    gens = B.objects.generating_set(seed=[B.one] if B.one != B.zero else [])
    free = [g for g in gens if g != B.one]
    space = len(rs) * N.order ** len(free)
    if len(free) > caps.max_free_dims or space > caps.max_u_candidates:
        raise ResourceRefusal(
            f"u-search over {len(free)} free generators needs {space} candidates "
            f"(caps: {caps.max_free_dims} dims, {caps.max_u_candidates} candidates)", space)
    out = []
    for r in rs:
        k = _sum_defect(A, F, r)
        for free_vals in itertools.product(range(N.order), repeat=len(free)):
            vals = iter(free_vals)
            values = [N.zero if g == B.one else next(vals) for g in gens]
            u = _propagate(B, N, k, gens, values)
            if u is not None and is_dual_object_diagrammatic(A, B, F, r, u):
                out.append(DualObject(r, u, F))
    return sorted(set(out))


def brute_force_dual_objects(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor,
                             caps: Caps = DEFAULT_CAPS) -> list[DualObject]:
    """Every (r, u) over all objects and all label tables, filtered diagrammatically."""
    _check_fixture(A, B, F)
    space = A.n_objects * A.n_labels ** B.n_objects
    if space > caps.max_oracle_candidates:
        raise ResourceRefusal(f"brute force over {space} candidates exceeds cap", space)
    return [DualObject(r, u, F)
            for r in range(A.n_objects)
            for u in itertools.product(range(A.n_labels), repeat=B.n_objects)
            if is_dual_object_diagrammatic(A, B, F, r, u)]


# Arithmetic of dual objects
# --------------------------


def dual_zero(F: AnnFunctor) -> DualObject:
    A = F.dst
    return DualObject(A.zero, (A.labels.zero,) * F.src.n_objects, F)


def dual_one(F: AnnFunctor) -> DualObject:
    A = F.dst
    return DualObject(A.one, (A.labels.zero,) * F.src.n_objects, F)


def _uarrows(d: DualObject) -> Morphism:
    return _Module(d.functor, d.r, np.asarray(d.u)).uarr(np.arange(d.functor.src.n_objects))


def dual_sum(d1: DualObject, d2: DualObject) -> DualObject:
    """``u_{r+s,X} = L^{-1}_{FX,r,s} o (u_{r,X} + u_{s,X})``."""
    F = _same_fixture(d1, d2)
    A = F.dst
    FX = F.omap
    u = A.seq(A.oplus_mor(_uarrows(d1), _uarrows(d2)), A.inverse(A.dist_left(FX, d1.r, d2.r)))
    return DualObject(int(A.oplus[d1.r, d2.r]), tuple(int(v) for v in u.label), F)


def dual_product(d1: DualObject, d2: DualObject) -> DualObject:
    """``u_{rs,X} = (u_{r,X} (x) id_s) o (id_r (x) u_{s,X})``."""
    F = _same_fixture(d1, d2)
    A = F.dst
    u = A.seq(A.otimes_mor(A.identity(d1.r), _uarrows(d2)),
              A.otimes_mor(_uarrows(d1), A.identity(d2.r)))
    return DualObject(int(A.otimes[d1.r, d2.r]), tuple(int(v) for v in u.label), F)


def dual_negate(d: DualObject) -> DualObject:
    """Inverse for the sum: ``u_{-r,X} = lambda(FX, r, -r) - u_{r,X}``."""
    F = _same_fixture(d)
    A = F.dst
    rn = int(A.objects.neg[d.r])
    lam = A.lam[F.omap, d.r, rn]
    u = A.labels.sub(lam, np.asarray(d.u))
    return DualObject(rn, tuple(int(v) for v in u), F)


def dual_object_laws(objects: Sequence[DualObject]) -> list[tuple[str, bool, tuple | None]]:
    """Closure, abelian-group and monoid laws over a list of dual objects.

    Every law is checked at every tuple; returns ``(law, passed, witness)`` with
    witness given as indices into ``objects``.
    """
    if not objects:
        return []
    F = _same_fixture(*objects)
    A, B = F.dst, F.src
    members = {d.key() for d in objects}
    zero, one = dual_zero(F), dual_one(F)
    n = len(objects)
    results = []

    def law(name, tuples, ok):
        for t in tuples:
            if not ok(*t):
                results.append((name, False, tuple(t)))
                return
        results.append((name, True, None))

    idx = range(n)
    pairs = list(itertools.product(idx, idx))
    triples = list(itertools.product(idx, idx, idx))
    o = objects
    S = {(i, j): dual_sum(o[i], o[j]) for i, j in pairs}
    P = {(i, j): dual_product(o[i], o[j]) for i, j in pairs}
    Ng = [dual_negate(d) for d in o]
    member = lambda d: d.key() in members or is_dual_object_diagrammatic(A, B, F, d.r, d.u)
    law("zero is a dual object", [()], lambda: member(zero))
    law("one is a dual object", [()], lambda: member(one))
    law("sum closed", pairs, lambda i, j: member(S[i, j]))
    law("product closed", pairs, lambda i, j: member(P[i, j]))
    law("negate closed", [(i,) for i in idx], lambda i: member(Ng[i]))
    law("sum associative", triples,
        lambda i, j, k: dual_sum(S[i, j], o[k]).key() == dual_sum(o[i], S[j, k]).key())
    law("sum commutative", pairs, lambda i, j: S[i, j].key() == S[j, i].key())
    law("sum unit", [(i,) for i in idx],
        lambda i: dual_sum(o[i], zero).key() == o[i].key() == dual_sum(zero, o[i]).key())
    law("negate is inverse", [(i,) for i in idx],
        lambda i: dual_sum(o[i], Ng[i]).key() == zero.key() == dual_sum(Ng[i], o[i]).key())
    law("product associative", triples,
        lambda i, j, k: dual_product(P[i, j], o[k]).key() == dual_product(o[i], P[j, k]).key())
    law("product unit", [(i,) for i in idx],
        lambda i: dual_product(o[i], one).key() == o[i].key() == dual_product(one, o[i]).key())
    return results


# The dual category
# -----------------


@dataclass(frozen=True, eq=False)
class DualCategory:
    presentation: AnnPresentation
    objects: list[DualObject]
    label_elems: list[int]
    functor: AnnFunctor

    @property
    def A(self) -> AnnPresentation:
        return self.functor.dst

    @property
    def B(self) -> AnnPresentation:
        return self.functor.src

    def index(self, d: DualObject) -> int:
        return self.objects.index(d)


def build_dual_category(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor,
                        caps: Caps = DEFAULT_CAPS, *,
                        objects: list[DualObject] | None = None) -> DualCategory:
    _check_fixture(A, B, F)
    objs = objects if objects is not None else enumerate_dual_objects(A, B, F, caps)
    if not objs:
        raise InternalInconsistency("no dual objects at all (the zero object should always be one)")
    pos = {d.key(): i for i, d in enumerate(objs)}
    n = len(objs)

    def find(d: DualObject, what: str) -> int:
        try:
            return pos[d.key()]
        except KeyError:
            raise InternalInconsistency(f"{what} {d} is not among the enumerated dual objects") from None

    oplus = [[find(dual_sum(objs[i], objs[j]), "sum") for j in range(n)] for i in range(n)]
    otimes = [[find(dual_product(objs[i], objs[j]), "product") for j in range(n)] for i in range(n)]
    zero = find(dual_zero(F), "zero")
    one = find(dual_one(F), "unit")

    elems = label_centralizer(A, F)
    labels, elems = A.labels.restrict(elems)
    lpos = {a: i for i, a in enumerate(elems)}

    def lab(a, what: str) -> int:
        try:
            return lpos[int(a)]
        except KeyError:
            raise InternalInconsistency(f"{what} label {int(a)} is not a morphism of the dual") from None

    rs = [d.r for d in objs]
    lact = [[lab(A.lact[r, a], "left action") for a in elems] for r in rs]
    ract = [[lab(A.ract[r, a], "right action") for a in elems] for r in rs]
    lam = [[[lab(A.lam[r, s, t], "lambda") for t in rs] for s in rs] for r in rs]
    eta = [[lab(A.eta[r, s], "eta") for s in rs] for r in rs]
    P = make_presentation(oplus, otimes, zero, one, labels, lact, ract, lam, eta,
                          name=f"({B.name},{F.name})*", object_names=[str(d) for d in objs],
                          max_objects=max(n, caps.max_ring))
    return DualCategory(P, list(objs), elems, F)


def center(A: AnnPresentation, caps: Caps = DEFAULT_CAPS) -> tuple[DualCategory, np.ndarray]:
    """The dual over the identity functor with braiding ``c_{(r,u),(s,v)} = u(s)``."""
    F = identity_functor(A)
    D = build_dual_category(A, A, F, caps)
    lpos = {a: i for i, a in enumerate(D.label_elems)}
    n = len(D.objects)
    c = np.zeros((n, n), dtype=np.int64)
    for i, d in enumerate(D.objects):
        for j, e in enumerate(D.objects):
            a = d.u[e.r]
            if a not in lpos:
                raise InternalInconsistency(f"braiding label u({e.r}) = {a} of {d} is not a morphism of the center")
            c[i, j] = lpos[a]
    return D, c


def forgetful_functor(D: DualCategory) -> AnnFunctor:
    return make_functor(D.presentation, D.A, [d.r for d in D.objects], D.label_elems,
                        name=f"forget{D.presentation.name}")


# Closed form vs diagrams
# -----------------------


@dataclass(frozen=True)
class Discrepancy:
    r: int
    u: tuple[int, ...]
    closed_form: bool
    diagrammatic: bool
    guarded: bool
    closed_form_failures: tuple[str, ...]
    diagram_failures: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "u": list(self.u),
            "closed_form": self.closed_form,
            "diagrammatic": self.diagrammatic,
            "guarded": self.guarded,
            "closed_form_failures": list(self.closed_form_failures),
            "diagram_failures": list(self.diagram_failures),
        }


@dataclass
class OracleAgreement:
    checked: int = 0
    guarded: int = 0
    agreed: int = 0
    members: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def guarded_discrepancies(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.guarded]

    @property
    def passed(self) -> bool:
        return not self.guarded_discrepancies

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "guarded": self.guarded,
            "agreed": self.agreed,
            "members": self.members,
            "passed": self.passed,
            "discrepancies": [d.to_dict() for d in self.discrepancies],
        }


def centralizes_label_image(A: AnnPresentation, F: AnnFunctor, r: int) -> bool:
    img = np.unique(F.lmap)
    return bool(np.array_equal(A.lact[r, img], A.ract[r, img]))


def oracle_agreement(A: AnnPresentation, B: AnnPresentation, F: AnnFunctor,
                     caps: Caps = DEFAULT_CAPS, *, convention: str = SUM) -> OracleAgreement:
    """Compare closed-form and diagrammatic membership on every (r, u).

    A candidate is guarded when r also centralizes the label image of F;
    a discrepancy on a guarded candidate is a genuine disagreement.
    """
    _check_fixture(A, B, F)
    space = A.n_objects * A.n_labels ** B.n_objects
    if space > caps.max_oracle_candidates:
        raise ResourceRefusal(f"oracle comparison over {space} candidates exceeds cap "
                              f"{caps.max_oracle_candidates}", space)
    out = OracleAgreement()
    for r in range(A.n_objects):
        guarded = centralizes_label_image(A, F, r)
        for u in itertools.product(range(A.n_labels), repeat=B.n_objects):
            conds = closed_form_conditions(A, B, F, r, u, convention=convention)
            cf = all(conds.values())
            rep = membership_report(A, B, F, r, u)
            dg = rep.passed
            out.checked += 1
            out.guarded += guarded
            out.members += dg
            if cf == dg:
                out.agreed += 1
            else:
                out.discrepancies.append(Discrepancy(
                    r, tuple(u), cf, dg, guarded,
                    tuple(k for k, v in conds.items() if not v),
                    tuple(f.name for f in rep.failures)))
    return out
