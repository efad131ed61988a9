"""Almost-strict skeletal Ann-categories and their axiom checker.

Objects form an abelian group under ``oplus`` and a monoid under ``otimes``.
Every hom-set is ``{X} x N``: a morphism X -> X carries a label in the
abelian group N, composition adds labels, and

    (x, a) (+) (y, b) = (x + y, a + b)
    (x, a) (x) (y, b) = (x y, x.b + a.y)

with the actions ``lact``/``ract`` of objects on N.  All constraints are
identities except the left distributivity constraint ``L_{x,y,z}``
(label ``lam[x, y, z]``) and the commutativity constraint ``c_{x,y}``
(label ``eta[x, y]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import (
    AbelianGroup,
    Bimodule,
    FiniteRing,
    as_table,
    check_actions,
    first_violation,
    make_abelian_group,
    make_table_ring,
    make_bimodule,
)
from .config import DEFAULT_CAPS
from .diagrams import AxiomReport, Family, FamilyResult, Morphism, run_families, same_object
from .errors import AxiomError, NotCertified, ResourceRefusal, StructureError

__all__ = [
    "AnnPresentation",
    "Morphism",
    "make_presentation",
    "from_rm",
    "table_from_function",
    "check_axioms",
    "check_braiding",
    "AXIOM_FAMILIES",
    "BRAIDING_FAMILIES",
    "pi0",
    "pi1",
]


@dataclass(frozen=True, eq=False)
class AnnPresentation:
    objects: AbelianGroup
    otimes: np.ndarray
    one: int
    labels: AbelianGroup
    lact: np.ndarray
    ract: np.ndarray
    lam: np.ndarray
    eta: np.ndarray
    name: str = ""
    object_names: tuple | None = None

    @property
    def oplus(self) -> np.ndarray:
        return self.objects.add

    @property
    def zero(self) -> int:
        return self.objects.zero

    @property
    def n_objects(self) -> int:
        return self.objects.order

    @property
    def n_labels(self) -> int:
        return self.labels.order

    def object_name(self, x: int) -> str:
        if self.object_names is None:
            return str(x)
        return str(self.object_names[x])

    # morphisms

    def mor(self, x, a) -> Morphism:
        return Morphism(x, a)

    def identity(self, x) -> Morphism:
        return Morphism(x, np.full(np.shape(x), self.labels.zero, dtype=np.int64)
                        if np.ndim(x) else self.labels.zero)

    def compose(self, f: Morphism, g: Morphism) -> Morphism:
        """``f o g``: first g, then f."""
        same_object(f.obj, g.obj)
        return Morphism(f.obj, self.labels.add[f.label, g.label])

    def seq(self, *arrows: Morphism) -> Morphism:
        """Compose in diagram order: ``seq(f, g, h) = h o g o f``."""
        out = arrows[0]
        for g in arrows[1:]:
            out = self.compose(g, out)
        return out

    def inverse(self, f: Morphism) -> Morphism:
        return Morphism(f.obj, self.labels.neg[f.label])

    def oplus_mor(self, f: Morphism, g: Morphism) -> Morphism:
        return Morphism(self.oplus[f.obj, g.obj], self.labels.add[f.label, g.label])

    def otimes_mor(self, f: Morphism, g: Morphism) -> Morphism:
        label = self.labels.add[self.lact[f.obj, g.label], self.ract[g.obj, f.label]]
        return Morphism(self.otimes[f.obj, g.obj], label)

    # constraint morphisms

    def dist_left(self, x, y, z) -> Morphism:
        """``L_{x,y,z}: x(y + z) -> xy + xz``."""
        src = self.otimes[x, self.oplus[y, z]]
        same_object(src, self.oplus[self.otimes[x, y], self.otimes[x, z]])
        return Morphism(src, self.lam[x, y, z])

    def dist_right(self, x, y, z) -> Morphism:
        """``R_{x,y,z}: (x + y)z -> xz + yz``, strict."""
        src = self.otimes[self.oplus[x, y], z]
        same_object(src, self.oplus[self.otimes[x, z], self.otimes[y, z]])
        return self.identity(src)

    def comm(self, x, y) -> Morphism:
        """``c_{x,y}: x + y -> y + x``."""
        src = self.oplus[x, y]
        same_object(src, self.oplus[y, x])
        return Morphism(src, self.eta[x, y])

    def build_v(self, u, v, z, t) -> Morphism:
        """``(u + v) + (z + t) -> (u + z) + (v + t)`` built from id, c and strict a+."""
        return self.oplus_mor(self.oplus_mor(self.identity(u), self.comm(v, z)), self.identity(t))


def table_from_function(fn: Callable, size: int, arity: int) -> np.ndarray:
    idx = np.indices((size,) * arity).reshape(arity, -1).T
    return np.array([fn(*map(int, t)) for t in idx], dtype=np.int64).reshape((size,) * arity)


def make_presentation(oplus, otimes, zero: int, one: int, labels: AbelianGroup, lact, ract,
                      lam, eta, *, name: str = "", object_names=None,
                      max_objects: int = DEFAULT_CAPS.max_ring) -> AnnPresentation:
    """Validate the object-level structure; diagram axioms are left to check_axioms."""
    n = len(oplus)
    if n > max_objects:
        raise ResourceRefusal(f"{n} objects exceed cap {max_objects}", n)
    objects = make_abelian_group(oplus, zero)
    otimes = as_table(otimes, (n, n), "otimes", n)
    if not 0 <= one < n:
        raise StructureError(f"one {one} out of range")
    m = labels.order
    lact = as_table(lact, (n, m), "lact", m)
    ract = as_table(ract, (n, m), "ract", m)
    lam = as_table(lam, (n, n, n), "lambda", m)
    eta = as_table(eta, (n, n), "eta", m)
    add = objects.add
    x, y, z = np.ix_(range(n), range(n), range(n))

    def check(name, mask):
        w = first_violation(mask)
        if w is not None:
            raise AxiomError(name, w)

    check("object tensor associativity", otimes[otimes[x, y], z] != otimes[x, otimes[y, z]])
    check("object tensor unit", (otimes[one] != np.arange(n)) | (otimes[:, one] != np.arange(n)))
    check("object left distributivity", otimes[x, add[y, z]] != add[otimes[x, y], otimes[x, z]])
    check("object right distributivity", otimes[add[x, y], z] != add[otimes[x, z], otimes[y, z]])
    check("tensor with zero object", (otimes[:, zero] != zero) | (otimes[zero, :] != zero))
    check_actions(otimes, one, None, labels, lact, ract)
    if object_names is not None:
        object_names = tuple(object_names)
        if len(object_names) != n:
            raise StructureError("object_names length mismatch")
    return AnnPresentation(objects, otimes, int(one), labels, lact, ract, lam, eta, name, object_names)


def from_rm(R: FiniteRing, M: Bimodule, lam=None, eta=None, *, name: str = "") -> AnnPresentation:
    """Ann-category of type (R, M) with constraint tables ``lam`` (R^3 -> M) and ``eta`` (R^2 -> M).

    ``None`` means the zero table; a callable is tabulated.
    """
    if M.base is not R and not (np.array_equal(M.base.add, R.add) and np.array_equal(M.base.mul, R.mul)):
        raise StructureError("module is not over the given ring")
    n = R.order
    if lam is None:
        lam = np.full((n, n, n), M.zero)
    elif callable(lam):
        lam = table_from_function(lam, n, 3)
    if eta is None:
        eta = np.full((n, n), M.zero)
    elif callable(eta):
        eta = table_from_function(eta, n, 2)
    return make_presentation(R.add, R.mul, R.zero, R.one, M.group, M.lact, M.ract, lam, eta,
                             name=name or f"({R.name or 'R'},{M.name or 'M'})",
                             max_objects=max(n, DEFAULT_CAPS.max_ring))


# Axiom families
# --------------
#
# Each function returns the two paths of one diagram.  ``P`` is the
# presentation; object variables use capitals or x, y, z; label variables a, b, c.

SCG = "symmetric-categorical-group"
ANN1 = "ann-1"
ANN2 = "ann-2"
ANN3 = "ann-3"
NAT = "bifunctoriality-naturality"
INV = "object-invertibility"


def _c_involutive(P, x, y):
    return P.seq(P.comm(x, y), P.comm(y, x)), P.identity(P.oplus[x, y])


def _c_hexagon_left(P, x, y, z):
    lhs = P.comm(x, P.oplus[y, z])
    rhs = P.seq(P.oplus_mor(P.comm(x, y), P.identity(z)),
                P.oplus_mor(P.identity(y), P.comm(x, z)))
    return lhs, rhs


def _c_hexagon_right(P, x, y, z):
    lhs = P.comm(P.oplus[x, y], z)
    rhs = P.seq(P.oplus_mor(P.identity(x), P.comm(y, z)),
                P.oplus_mor(P.comm(x, z), P.identity(y)))
    return lhs, rhs


def _c_unit(P, x):
    return P.comm(x, P.zero), P.identity(x)


def _c_natural(P, x, y, a, b):
    f, g = P.mor(x, a), P.mor(y, b)
    return (P.seq(P.oplus_mor(f, g), P.comm(x, y)),
            P.seq(P.comm(x, y), P.oplus_mor(g, f)))


def _l_assoc_plus(P, A, X, Y, Z):
    # A(X + (Y + Z)) -> AX + A(Y + Z) -> AX + (AY + AZ); a+ strict
    lhs = P.seq(P.dist_left(A, X, P.oplus[Y, Z]),
                P.oplus_mor(P.identity(P.otimes[A, X]), P.dist_left(A, Y, Z)))
    rhs = P.seq(P.otimes_mor(P.identity(A), P.identity(P.oplus[P.oplus[X, Y], Z])),
                P.dist_left(A, P.oplus[X, Y], Z),
                P.oplus_mor(P.dist_left(A, X, Y), P.identity(P.otimes[A, Z])))
    return lhs, rhs


def _l_comm(P, A, X, Y):
    lhs = P.seq(P.otimes_mor(P.identity(A), P.comm(X, Y)), P.dist_left(A, Y, X))
    rhs = P.seq(P.dist_left(A, X, Y), P.comm(P.otimes[A, X], P.otimes[A, Y]))
    return lhs, rhs


def _l_unit_left(P, A, X):
    return P.dist_left(A, P.zero, X), P.identity(P.otimes[A, X])


def _l_unit_right(P, A, X):
    return P.dist_left(A, X, P.zero), P.identity(P.otimes[A, X])


def _r_assoc_plus(P, A, X, Y, Z):
    lhs = P.seq(P.dist_right(X, P.oplus[Y, Z], A),
                P.oplus_mor(P.identity(P.otimes[X, A]), P.dist_right(Y, Z, A)))
    rhs = P.seq(P.otimes_mor(P.identity(P.oplus[P.oplus[X, Y], Z]), P.identity(A)),
                P.dist_right(P.oplus[X, Y], Z, A),
                P.oplus_mor(P.dist_right(X, Y, A), P.identity(P.otimes[Z, A])))
    return lhs, rhs


def _r_comm(P, A, X, Y):
    lhs = P.seq(P.otimes_mor(P.comm(X, Y), P.identity(A)), P.dist_right(Y, X, A))
    rhs = P.seq(P.dist_right(X, Y, A), P.comm(P.otimes[X, A], P.otimes[Y, A]))
    return lhs, rhs


def _r_unit_left(P, A, X):
    return P.dist_right(P.zero, X, A), P.identity(P.otimes[X, A])


def _r_unit_right(P, A, X):
    return P.dist_right(X, P.zero, A), P.identity(P.otimes[X, A])


def _ann2_left_left(P, A, B, X, Y):
    # (AB)(X + Y) -> (AB)X + (AB)Y, directly or through A(B(X + Y)); a strict
    AB = P.otimes[A, B]
    lhs = P.dist_left(AB, X, Y)
    rhs = P.seq(P.otimes_mor(P.identity(A), P.dist_left(B, X, Y)),
                P.dist_left(A, P.otimes[B, X], P.otimes[B, Y]))
    return lhs, rhs


def _ann2_right_right(P, X, Y, B, A):
    BA = P.otimes[B, A]
    lhs = P.dist_right(X, Y, BA)
    rhs = P.seq(P.otimes_mor(P.dist_right(X, Y, B), P.identity(A)),
                P.dist_right(P.otimes[X, B], P.otimes[Y, B], A))
    return lhs, rhs


def _ann2_left_right(P, A, X, Y, B):
    # A((X + Y)B) -> (AX)B + (AY)B
    lhs = P.seq(P.otimes_mor(P.dist_left(A, X, Y), P.identity(B)),
                P.dist_right(P.otimes[A, X], P.otimes[A, Y], B))
    rhs = P.seq(P.otimes_mor(P.identity(A), P.dist_right(X, Y, B)),
                P.dist_left(A, P.otimes[X, B], P.otimes[Y, B]))
    return lhs, rhs


def _ann2_sum_sum(P, A, B, X, Y):
    # (A + B)(X + Y) -> (AX + AY) + (BX + BY)
    AX, AY, BX, BY = P.otimes[A, X], P.otimes[A, Y], P.otimes[B, X], P.otimes[B, Y]
    lhs = P.seq(P.dist_left(P.oplus[A, B], X, Y),
                P.oplus_mor(P.dist_right(A, B, X), P.dist_right(A, B, Y)),
                P.build_v(AX, BX, AY, BY))
    rhs = P.seq(P.dist_right(A, B, P.oplus[X, Y]),
                P.oplus_mor(P.dist_left(A, X, Y), P.dist_left(B, X, Y)))
    return lhs, rhs


def _ann3_left(P, X, Y):
    lhs = P.identity(P.oplus[X, Y])  # l_{X+Y}
    rhs = P.seq(P.dist_left(P.one, X, Y), P.oplus_mor(P.identity(X), P.identity(Y)))
    return lhs, rhs


def _ann3_right(P, X, Y):
    lhs = P.identity(P.oplus[X, Y])
    rhs = P.seq(P.dist_right(X, Y, P.one), P.oplus_mor(P.identity(X), P.identity(Y)))
    return lhs, rhs


def _tensor_identities(P, x, y):
    return P.otimes_mor(P.identity(x), P.identity(y)), P.identity(P.otimes[x, y])


def _tensor_interchange(P, x, y, a, a2, b, b2):
    f, f2, g, g2 = P.mor(x, a), P.mor(x, a2), P.mor(y, b), P.mor(y, b2)
    lhs = P.otimes_mor(P.compose(f2, f), P.compose(g2, g))
    rhs = P.compose(P.otimes_mor(f2, g2), P.otimes_mor(f, g))
    return lhs, rhs


def _tensor_assoc_natural(P, x, y, z, a, b, c):
    f, g, h = P.mor(x, a), P.mor(y, b), P.mor(z, c)
    return P.otimes_mor(P.otimes_mor(f, g), h), P.otimes_mor(f, P.otimes_mor(g, h))


def _tensor_unit_left(P, x, a):
    f = P.mor(x, a)
    return P.otimes_mor(P.identity(P.one), f), f


def _tensor_unit_right(P, x, a):
    f = P.mor(x, a)
    return P.otimes_mor(f, P.identity(P.one)), f


def _l_natural(P, x, y, z, a, b, c):
    f, g, h = P.mor(x, a), P.mor(y, b), P.mor(z, c)
    L = P.dist_left(x, y, z)
    lhs = P.seq(P.otimes_mor(f, P.oplus_mor(g, h)), L)
    rhs = P.seq(L, P.oplus_mor(P.otimes_mor(f, g), P.otimes_mor(f, h)))
    return lhs, rhs


def _r_natural(P, x, y, z, a, b, c):
    f, g, h = P.mor(x, a), P.mor(y, b), P.mor(z, c)
    R = P.dist_right(x, y, z)
    lhs = P.seq(P.otimes_mor(P.oplus_mor(f, g), h), R)
    rhs = P.seq(R, P.oplus_mor(P.otimes_mor(f, h), P.otimes_mor(g, h)))
    return lhs, rhs


def _object_inverse(P, x):
    # A + A' = O for the chosen A'
    xn = P.objects.neg[x]
    return P.identity(P.oplus[x, xn]), P.identity(np.full(np.shape(x), P.zero) if np.ndim(x) else P.zero)


def _fam(name, group, variables, paths, doc=""):
    kinds = tuple("label" if v[0] in "abc" else "obj" for v in variables)
    return Family(name, group, tuple(variables), kinds, paths, doc)


AXIOM_FAMILIES: list[Family] = [
    _fam("object inverses", INV, ("x",), _object_inverse),
    _fam("c+ unit", SCG, ("x",), _c_unit),
    _fam("c+ involutive", SCG, ("x", "y"), _c_involutive),
    _fam("c+ hexagon (x, y+z)", SCG, ("x", "y", "z"), _c_hexagon_left),
    _fam("c+ hexagon (x+y, z)", SCG, ("x", "y", "z"), _c_hexagon_right),
    _fam("L^A unit (O, X)", ANN1, ("A", "X"), _l_unit_left),
    _fam("L^A unit (X, O)", ANN1, ("A", "X"), _l_unit_right),
    _fam("L^A compatible with c+", ANN1, ("A", "X", "Y"), _l_comm),
    _fam("L^A compatible with a+", ANN1, ("A", "X", "Y", "Z"), _l_assoc_plus),
    _fam("R^A unit (O, X)", ANN1, ("A", "X"), _r_unit_left),
    _fam("R^A unit (X, O)", ANN1, ("A", "X"), _r_unit_right),
    _fam("R^A compatible with c+", ANN1, ("A", "X", "Y"), _r_comm),
    _fam("R^A compatible with a+", ANN1, ("A", "X", "Y", "Z"), _r_assoc_plus),
    _fam("Ann-3 left unit", ANN3, ("X", "Y"), _ann3_left),
    _fam("Ann-3 right unit", ANN3, ("X", "Y"), _ann3_right),
    _fam("Ann-2 L^{AB} vs L^A L^B", ANN2, ("A", "B", "X", "Y"), _ann2_left_left),
    _fam("Ann-2 R^{BA} vs R^B R^A", ANN2, ("X", "Y", "B", "A"), _ann2_right_right),
    _fam("Ann-2 L^A vs R^B", ANN2, ("A", "X", "Y", "B"), _ann2_left_right),
    _fam("Ann-2 (A+B)(X+Y) via v", ANN2, ("A", "B", "X", "Y"), _ann2_sum_sum),
    _fam("c+ natural", NAT, ("x", "y", "a", "b"), _c_natural),
    _fam("tensor preserves identities", NAT, ("x", "y"), _tensor_identities),
    _fam("tensor unit natural (I, -)", NAT, ("x", "a"), _tensor_unit_left),
    _fam("tensor unit natural (-, I)", NAT, ("x", "a"), _tensor_unit_right),
    _fam("L natural", NAT, ("x", "y", "z", "a", "b", "c"), _l_natural),
    _fam("R natural", NAT, ("x", "y", "z", "a", "b", "c"), _r_natural),
    _fam("tensor associativity natural", NAT, ("x", "y", "z", "a", "b", "c"), _tensor_assoc_natural),
    _fam("tensor interchange", NAT, ("x", "y", "a", "a2", "b", "b2"), _tensor_interchange),
]


def _sizes(P: AnnPresentation) -> dict[str, int]:
    return {"obj": P.n_objects, "label": P.n_labels}


def check_axioms(P: AnnPresentation, *, fail_fast: bool = False,
                 families: Sequence[Family] | None = None) -> AxiomReport:
    """Evaluate every axiom family at every tuple of its arity."""
    report = run_families(P.name or "presentation", families or AXIOM_FAMILIES, P, _sizes(P),
                          fail_fast=fail_fast)
    report.notes["eta_diagonal"] = [int(P.eta[x, x]) for x in range(P.n_objects)]
    return report


# Braiding
# --------


@dataclass(frozen=True, eq=False)
class _Braided:
    P: AnnPresentation
    c: np.ndarray

    def braid(self, x, y) -> Morphism:
        src = self.P.otimes[x, y]
        same_object(src, self.P.otimes[y, x])
        return Morphism(src, self.c[x, y])


def _b_typed(B: _Braided, x, y):
    P = B.P
    return P.identity(P.otimes[x, y]), P.identity(P.otimes[y, x])


def _b_hexagon_left(B: _Braided, x, y, z):
    P = B.P
    lhs = B.braid(x, P.otimes[y, z])
    rhs = P.seq(P.otimes_mor(B.braid(x, y), P.identity(z)),
                P.otimes_mor(P.identity(y), B.braid(x, z)))
    return lhs, rhs


def _b_hexagon_right(B: _Braided, x, y, z):
    P = B.P
    lhs = B.braid(P.otimes[x, y], z)
    rhs = P.seq(P.otimes_mor(P.identity(x), B.braid(y, z)),
                P.otimes_mor(B.braid(x, z), P.identity(y)))
    return lhs, rhs


def _b_natural(B: _Braided, x, y, a, b):
    P = B.P
    f, g = P.mor(x, a), P.mor(y, b)
    return (P.seq(P.otimes_mor(f, g), B.braid(x, y)),
            P.seq(B.braid(x, y), P.otimes_mor(g, f)))


def _b_unit_left(B: _Braided, x):
    return B.braid(B.P.one, x), B.P.identity(x)


def _b_unit_right(B: _Braided, x):
    return B.braid(x, B.P.one), B.P.identity(x)


def _b_distributive(B: _Braided, A, X, Y):
    P = B.P
    lhs = P.seq(P.dist_left(A, X, Y), P.oplus_mor(B.braid(A, X), B.braid(A, Y)))
    rhs = P.seq(B.braid(A, P.oplus[X, Y]), P.dist_right(X, Y, A))
    return lhs, rhs


def _b_zero(B: _Braided):
    P = B.P
    return B.braid(P.zero, P.zero), P.identity(P.zero)


BRAID = "braiding"
BRAIDING_FAMILIES: list[Family] = [
    _fam("braiding well-typed (xy = yx)", BRAID, ("x", "y"), _b_typed),
    _fam("braiding c(O, O) = id", BRAID, (), _b_zero),
    _fam("braiding unit (I, x)", BRAID, ("x",), _b_unit_left),
    _fam("braiding unit (x, I)", BRAID, ("x",), _b_unit_right),
    _fam("braiding natural", BRAID, ("x", "y", "a", "b"), _b_natural),
    _fam("braiding hexagon (x, yz)", BRAID, ("x", "y", "z"), _b_hexagon_left),
    _fam("braiding hexagon (xy, z)", BRAID, ("x", "y", "z"), _b_hexagon_right),
    _fam("braiding distributivity", BRAID, ("A", "X", "Y"), _b_distributive),
]


def check_braiding(P: AnnPresentation, c) -> AxiomReport:
    c = as_table(c, (P.n_objects, P.n_objects), "braiding", P.n_labels)
    ctx = _Braided(P, c)
    first = run_families((P.name or "presentation") + " braiding", BRAIDING_FAMILIES[:1], ctx, _sizes(P))
    if not first.passed:
        # c_{x,y} is not a morphism at all; the remaining diagrams are meaningless
        for fam in BRAIDING_FAMILIES[1:]:
            first.families.append(FamilyResult(fam.name, fam.group, False, 0, fam.variables,
                                               detail="not evaluated: braiding ill-typed"))
        return first
    rest = run_families(first.subject, BRAIDING_FAMILIES[1:], ctx, _sizes(P))
    first.families.extend(rest.families)
    return first


# Invariants
# ----------


def pi0(P: AnnPresentation, report: AxiomReport | None = None) -> FiniteRing:
    """Ring of object classes; skeletal, so the object tables themselves."""
    report = report or check_axioms(P)
    if not report.passed:
        raise NotCertified(f"{P.name}: axioms fail, pi0 refused", report)
    return make_table_ring(P.oplus, P.otimes, P.zero, P.one, name=f"pi0{P.name}",
                           max_size=max(P.n_objects, DEFAULT_CAPS.max_ring))


def pi1(P: AnnPresentation, report: AxiomReport | None = None) -> Bimodule:
    """Automorphisms of the zero object as a pi0-bimodule."""
    R = pi0(P, report)
    return make_bimodule(R, P.labels.add, P.labels.zero, P.lact, P.ract, name=f"pi1{P.name}",
                         max_size=max(P.n_labels, DEFAULT_CAPS.max_module))
