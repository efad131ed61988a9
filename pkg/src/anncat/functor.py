"""Ann-functors between presentations.

A functor is skeletal on objects (``omap``), acts on labels by a group
homomorphism (``lmap``), and carries two structure tables: ``mu[x, y]`` labels
``F(x) + F(y) -> F(x + y)`` and ``nu[x, y]`` labels ``F(x)F(y) -> F(xy)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import GroupHom, RingHom, as_table, first_violation
from .diagrams import AxiomReport, Family, Morphism, run_families, same_object
from .errors import AxiomError, StructureError
from .presentation import AnnPresentation

__all__ = [
    "AnnFunctor",
    "make_functor",
    "make_pq_functor",
    "identity_functor",
    "compose_functors",
    "same_presentation",
    "check_functor",
    "FUNCTOR_FAMILIES",
]


@dataclass(frozen=True, eq=False)
class AnnFunctor:
    src: AnnPresentation
    dst: AnnPresentation
    omap: np.ndarray
    lmap: np.ndarray
    mu: np.ndarray
    nu: np.ndarray
    name: str = ""

    def __call__(self, f: Morphism) -> Morphism:
        return Morphism(self.omap[f.obj], self.lmap[f.label])

    def on_object(self, x):
        return self.omap[x]

    def breve(self, x, y) -> Morphism:
        """``F(x) + F(y) -> F(x + y)`` in the target."""
        obj = self.omap[self.src.oplus[x, y]]
        same_object(obj, self.dst.oplus[self.omap[x], self.omap[y]])
        return Morphism(obj, self.mu[x, y])

    def tilde(self, x, y) -> Morphism:
        """``F(x)F(y) -> F(xy)`` in the target."""
        obj = self.omap[self.src.otimes[x, y]]
        same_object(obj, self.dst.otimes[self.omap[x], self.omap[y]])
        return Morphism(obj, self.nu[x, y])


def make_functor(src: AnnPresentation, dst: AnnPresentation, omap, lmap, mu=None, nu=None,
                 *, name: str = "") -> AnnFunctor:
    """Validate the object- and label-level structure of a functor."""
    n, m = src.n_objects, src.n_labels
    omap = as_table(omap, (n,), "omap", dst.n_objects)
    lmap = as_table(lmap, (m,), "lmap", dst.n_labels)
    zero_tab = np.full((n, n), dst.labels.zero)
    mu = as_table(zero_tab if mu is None else mu, (n, n), "mu", dst.n_labels)
    nu = as_table(zero_tab if nu is None else nu, (n, n), "nu", dst.n_labels)

    def check(axiom, mask):
        w = first_violation(mask)
        if w is not None:
            raise AxiomError(axiom, w)

    if omap[src.zero] != dst.zero:
        raise AxiomError("F(O) = O", (src.zero,))
    if omap[src.one] != dst.one:
        raise AxiomError("F(I) = I", (src.one,))
    x, y = np.ix_(range(n), range(n))
    check("F preserves + on objects", omap[src.oplus[x, y]] != dst.oplus[omap[x], omap[y]])
    check("F preserves (x) on objects", omap[src.otimes[x, y]] != dst.otimes[omap[x], omap[y]])
    a, b = np.ix_(range(m), range(m))
    check("label map additive", lmap[src.labels.add[a, b]] != dst.labels.add[lmap[a], lmap[b]])
    x, a = np.ix_(range(n), range(m))
    check("label map intertwines left actions", lmap[src.lact[x, a]] != dst.lact[omap[x], lmap[a]])
    check("label map intertwines right actions", lmap[src.ract[x, a]] != dst.ract[omap[x], lmap[a]])
    return AnnFunctor(src, dst, omap, lmap, mu, nu, name)


def make_pq_functor(B: AnnPresentation, A: AnnPresentation, p: RingHom, q: GroupHom,
                    mu=None, nu=None, *, name: str = "") -> AnnFunctor:
    """Functor of type (p, q): ``F(x) = p(x)``, ``F(x, a) = (p(x), q(a))``."""
    if p.src.order != B.n_objects or p.dst.order != A.n_objects:
        raise StructureError("p does not map between the object rings")
    if q.src.order != B.n_labels or q.dst.order != A.n_labels:
        raise StructureError("q does not map between the label groups")
    return make_functor(B, A, p.map, q.map, mu, nu, name=name)


def identity_functor(A: AnnPresentation) -> AnnFunctor:
    return make_functor(A, A, np.arange(A.n_objects), np.arange(A.n_labels),
                        name=f"id{A.name}")


def same_presentation(P: AnnPresentation, Q: AnnPresentation) -> bool:
    """Identical objects, labels, actions and constraint tables."""
    if P is Q:
        return True
    pairs = [(P.oplus, Q.oplus), (P.otimes, Q.otimes), (P.labels.add, Q.labels.add),
             (P.lact, Q.lact), (P.ract, Q.ract), (P.lam, Q.lam), (P.eta, Q.eta)]
    return (P.one == Q.one and P.zero == Q.zero and P.labels.zero == Q.labels.zero
            and all(a.shape == b.shape and np.array_equal(a, b) for a, b in pairs))


def compose_functors(G: AnnFunctor, F: AnnFunctor) -> AnnFunctor:
    """``G o F``; structure labels combine as ``lmap_G(mu_F(x, y)) + mu_G(Fx, Fy)``."""
    if not same_presentation(F.dst, G.src):
        raise StructureError("functors are not composable")
    n = F.src.n_objects
    x, y = np.ix_(range(n), range(n))
    add = G.dst.labels.add
    mu = add[G.lmap[F.mu], G.mu[F.omap[x], F.omap[y]]]
    nu = add[G.lmap[F.nu], G.nu[F.omap[x], F.omap[y]]]
    return make_functor(F.src, G.dst, G.omap[F.omap], G.lmap[F.lmap], mu, nu,
                        name=f"{G.name}o{F.name}")


# Diagram families; object variables range over the source, labels over N_src.


def _preserves_composition(F: AnnFunctor, x, a, b):
    S, T = F.src, F.dst
    f, g = S.mor(x, a), S.mor(x, b)
    return F(S.compose(f, g)), T.compose(F(f), F(g))


def _preserves_identity(F: AnnFunctor, x):
    return F(F.src.identity(x)), F.dst.identity(F.omap[x])


def _breve_natural(F: AnnFunctor, x, y, a, b):
    S, T = F.src, F.dst
    f, g = S.mor(x, a), S.mor(y, b)
    return (T.seq(T.oplus_mor(F(f), F(g)), F.breve(x, y)),
            T.seq(F.breve(x, y), F(S.oplus_mor(f, g))))


def _breve_assoc(F: AnnFunctor, x, y, z):
    S, T = F.src, F.dst
    Fx, Fz = F.omap[x], F.omap[z]
    lhs = T.seq(T.oplus_mor(F.breve(x, y), T.identity(Fz)), F.breve(S.oplus[x, y], z))
    rhs = T.seq(T.oplus_mor(T.identity(Fx), F.breve(y, z)), F.breve(x, S.oplus[y, z]))
    return lhs, rhs


def _breve_comm(F: AnnFunctor, x, y):
    S, T = F.src, F.dst
    lhs = T.seq(F.breve(x, y), F(S.comm(x, y)))
    rhs = T.seq(T.comm(F.omap[x], F.omap[y]), F.breve(y, x))
    return lhs, rhs


def _breve_unit_left(F: AnnFunctor, x):
    return F.breve(F.src.zero, x), F.dst.identity(F.omap[x])


def _breve_unit_right(F: AnnFunctor, x):
    return F.breve(x, F.src.zero), F.dst.identity(F.omap[x])


def _tilde_natural(F: AnnFunctor, x, y, a, b):
    S, T = F.src, F.dst
    f, g = S.mor(x, a), S.mor(y, b)
    return (T.seq(T.otimes_mor(F(f), F(g)), F.tilde(x, y)),
            T.seq(F.tilde(x, y), F(S.otimes_mor(f, g))))


def _tilde_assoc(F: AnnFunctor, x, y, z):
    S, T = F.src, F.dst
    lhs = T.seq(T.otimes_mor(F.tilde(x, y), T.identity(F.omap[z])), F.tilde(S.otimes[x, y], z))
    rhs = T.seq(T.otimes_mor(T.identity(F.omap[x]), F.tilde(y, z)), F.tilde(x, S.otimes[y, z]))
    return lhs, rhs


def _tilde_unit_left(F: AnnFunctor, x):
    return F.tilde(F.src.one, x), F.dst.identity(F.omap[x])


def _tilde_unit_right(F: AnnFunctor, x):
    return F.tilde(x, F.src.one), F.dst.identity(F.omap[x])


def _left_distributivity(F: AnnFunctor, x, y, z):
    # FX(FY + FZ) -> F(XY + XZ)
    S, T = F.src, F.dst
    Fx, Fy, Fz = F.omap[x], F.omap[y], F.omap[z]
    lhs = T.seq(T.otimes_mor(T.identity(Fx), F.breve(y, z)),
                F.tilde(x, S.oplus[y, z]),
                F(S.dist_left(x, y, z)))
    rhs = T.seq(T.dist_left(Fx, Fy, Fz),
                T.oplus_mor(F.tilde(x, y), F.tilde(x, z)),
                F.breve(S.otimes[x, y], S.otimes[x, z]))
    return lhs, rhs


def _right_distributivity(F: AnnFunctor, x, y, z):
    # (FX + FY)FZ -> F(XZ + YZ)
    S, T = F.src, F.dst
    Fx, Fy, Fz = F.omap[x], F.omap[y], F.omap[z]
    lhs = T.seq(T.otimes_mor(F.breve(x, y), T.identity(Fz)),
                F.tilde(S.oplus[x, y], z),
                F(S.dist_right(x, y, z)))
    rhs = T.seq(T.dist_right(Fx, Fy, Fz),
                T.oplus_mor(F.tilde(x, z), F.tilde(y, z)),
                F.breve(S.otimes[x, z], S.otimes[y, z]))
    return lhs, rhs


def _fam(name, group, variables, paths):
    kinds = tuple("label" if v[0] in "ab" else "obj" for v in variables)
    return Family(name, group, tuple(variables), kinds, paths)


FUNCTOR_FAMILIES: list[Family] = [
    _fam("F preserves identities", "functor", ("x",), _preserves_identity),
    _fam("F preserves composition", "functor", ("x", "a", "b"), _preserves_composition),
    _fam("F-breve unit (O, x)", "oplus-functor", ("x",), _breve_unit_left),
    _fam("F-breve unit (x, O)", "oplus-functor", ("x",), _breve_unit_right),
    _fam("F-breve natural", "oplus-functor", ("x", "y", "a", "b"), _breve_natural),
    _fam("F-breve compatible with a+", "oplus-functor", ("x", "y", "z"), _breve_assoc),
    _fam("F-breve compatible with c+", "oplus-functor", ("x", "y"), _breve_comm),
    _fam("F-tilde unit (I, x)", "otimes-functor", ("x",), _tilde_unit_left),
    _fam("F-tilde unit (x, I)", "otimes-functor", ("x",), _tilde_unit_right),
    _fam("F-tilde natural", "otimes-functor", ("x", "y", "a", "b"), _tilde_natural),
    _fam("F-tilde compatible with a", "otimes-functor", ("x", "y", "z"), _tilde_assoc),
    _fam("F compatible with L", "ann-functor", ("x", "y", "z"), _left_distributivity),
    _fam("F compatible with R", "ann-functor", ("x", "y", "z"), _right_distributivity),
]


def check_functor(F: AnnFunctor, *, fail_fast: bool = False) -> AxiomReport:
    sizes = {"obj": F.src.n_objects, "label": F.src.n_labels}
    return run_families(F.name or "functor", FUNCTOR_FAMILIES, F, sizes, fail_fast=fail_fast)
