"""Finite unital rings, abelian groups and bimodules given by Cayley tables.

Elements are dense indices ``0..n-1`` and every operation is a table lookup.
All constructors validate their axioms exhaustively and raise
:class:`~anncat.errors.AxiomError` carrying the first violating tuple in
lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .config import DEFAULT_CAPS
from .errors import AxiomError, ResourceRefusal, StructureError

__all__ = [
    "AbelianGroup",
    "FiniteRing",
    "Bimodule",
    "RingHom",
    "GroupHom",
    "as_table",
    "first_violation",
    "make_abelian_group",
    "make_zn",
    "make_zn_group",
    "make_table_ring",
    "ring_from_operations",
    "product_ring",
    "upper_triangular_z2",
    "make_bimodule",
    "regular_bimodule",
    "zn_bimodule",
    "make_ring_hom",
    "make_group_hom",
    "centralizer_in_ring",
    "centralizer_in_module",
    "is_subring",
    "is_subgroup",
]


def as_table(data, shape: tuple[int, ...], name: str, bound: int) -> np.ndarray:
    """Convert nested lists to a read-only int array of ``shape`` with entries < ``bound``."""
    try:
        arr = np.array(data, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"{name}: not a rectangular integer table ({exc})") from None
    if arr.shape != tuple(shape):
        raise StructureError(f"{name}: expected shape {tuple(shape)}, got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= bound):
        bad = first_violation((arr < 0) | (arr >= bound))
        raise StructureError(f"{name}: entry {arr[bad]} at {bad} outside 0..{bound - 1}")
    arr.setflags(write=False)
    return arr


def first_violation(mask: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically first index where ``mask`` is true, or None."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _check(axiom: str, mask: np.ndarray, detail: str = "") -> None:
    w = first_violation(mask)
    if w is not None:
        raise AxiomError(axiom, w, detail)


# Abelian groups
# --------------


@dataclass(frozen=True, eq=False)
class AbelianGroup:
    """Finite abelian group on ``0..order-1``; ``neg`` is derived."""

    add: np.ndarray
    zero: int
    neg: np.ndarray

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.order)

    def sum(self, items: Iterable[int]) -> int:
        total = self.zero
        for x in items:
            total = int(self.add[total, x])
        return total

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def subgroup_generated(self, gens: Iterable[int]) -> set[int]:
        seen = {self.zero}
        frontier = [self.zero]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = int(self.add[x, g])
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def generating_set(self, seed: Sequence[int] = ()) -> list[int]:
        """Greedy generating set: ``seed`` first, then smallest missing elements."""
        gens: list[int] = []
        span = {self.zero}
        for g in list(seed) + list(self.elements):
            if g not in span:
                gens.append(g)
                span = self.subgroup_generated(gens)
            if len(span) == self.order:
                break
        return gens

    def restrict(self, subset: Sequence[int]) -> tuple["AbelianGroup", list[int]]:
        """The subgroup on ``sorted(subset)`` re-indexed densely, plus the inclusion."""
        elems = sorted(set(int(a) for a in subset))
        if not is_subgroup(self, elems):
            raise StructureError(f"{elems} is not a subgroup")
        index = {a: i for i, a in enumerate(elems)}
        add = [[index[int(self.add[a, b])] for b in elems] for a in elems]
        return make_abelian_group(add, index[self.zero]), elems


def make_abelian_group(add, zero: int = 0, *, max_size: int | None = None) -> AbelianGroup:
    n = len(add)
    if n == 0:
        raise StructureError("group must have at least one element")
    if max_size is not None and n > max_size:
        raise ResourceRefusal(f"group of order {n} exceeds cap {max_size}", n)
    add = as_table(add, (n, n), "add", n)
    if not 0 <= zero < n:
        raise StructureError(f"zero {zero} out of range")
    a, b, c = np.ix_(range(n), range(n), range(n))
    _check("additive associativity", add[add[a, b], c] != add[a, add[b, c]])
    _check("additive commutativity", add != add.T)
    _check("additive identity", add[zero] != np.arange(n))
    neg = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        hits = np.flatnonzero(add[x] == zero)
        if hits.size == 0:
            raise AxiomError("additive inverse", (x,), "no element y with x + y = 0")
        neg[x] = hits[0]
    neg.setflags(write=False)
    return AbelianGroup(add, int(zero), neg)


def make_zn_group(n: int) -> AbelianGroup:
    if n < 1:
        raise StructureError(f"invalid size {n}: need n >= 1")
    x = np.arange(n)
    return make_abelian_group((x[:, None] + x[None, :]) % n, 0)


# Rings
# -----


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """Finite unital ring given by addition and multiplication tables."""

    group: AbelianGroup
    mul: np.ndarray
    one: int
    name: str = ""

    @property
    def add(self) -> np.ndarray:
        return self.group.add

    @property
    def zero(self) -> int:
        return self.group.zero

    @property
    def neg(self) -> np.ndarray:
        return self.group.neg

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def center(self) -> list[int]:
        return centralizer_in_ring(self, self.elements)

    def __repr__(self) -> str:
        label = self.name or "ring"
        return f"<FiniteRing {label} order={self.order}>"


def make_table_ring(add, mul, zero: int = 0, one: int = 1, *, name: str = "",
                    max_size: int = DEFAULT_CAPS.max_ring) -> FiniteRing:
    """Validate ring tables; the first violated axiom is raised with its witness."""
    n = len(add)
    if n > max_size:
        raise ResourceRefusal(f"ring of order {n} exceeds cap {max_size}", n)
    group = make_abelian_group(add, zero)
    mul = as_table(mul, (n, n), "mul", n)
    if not 0 <= one < n:
        raise StructureError(f"one {one} out of range")
    a, b, c = np.ix_(range(n), range(n), range(n))
    add = group.add
    _check("multiplicative associativity", mul[mul[a, b], c] != mul[a, mul[b, c]])
    _check("multiplicative identity", (mul[one] != np.arange(n)) | (mul[:, one] != np.arange(n)))
    _check("left distributivity", mul[a, add[b, c]] != add[mul[a, b], mul[a, c]])
    _check("right distributivity", mul[add[a, b], c] != add[mul[a, c], mul[b, c]])
    _check("zero annihilates", (mul[:, zero] != zero) | (mul[zero, :] != zero))
    return FiniteRing(group, mul, int(one), name)


def make_zn(n: int) -> FiniteRing:
    if n < 1:
        raise StructureError(f"invalid size {n}: need n >= 1")
    x = np.arange(n)
    return make_table_ring((x[:, None] + x[None, :]) % n, (x[:, None] * x[None, :]) % n,
                           0, 1 % n, name=f"Z{n}")


def _tables_from_operations(elements, add_fn, mul_fn):
    index = {e: i for i, e in enumerate(elements)}
    add = [[index[add_fn(x, y)] for y in elements] for x in elements]
    mul = [[index[mul_fn(x, y)] for y in elements] for x in elements]
    return index, add, mul


def ring_from_operations(elements: Sequence, add_fn: Callable, mul_fn: Callable,
                         zero, one, name: str = "") -> tuple[FiniteRing, list]:
    """Build a ring from hashable element values; returns the ring and the value list."""
    elements = list(elements)
    index, add, mul = _tables_from_operations(elements, add_fn, mul_fn)
    return make_table_ring(add, mul, index[zero], index[one], name=name), elements


def product_ring(R: FiniteRing, S: FiniteRing) -> FiniteRing:
    pairs = list(itertools.product(R.elements, S.elements))
    ring, _ = ring_from_operations(
        pairs,
        lambda x, y: (int(R.add[x[0], y[0]]), int(S.add[x[1], y[1]])),
        lambda x, y: (int(R.mul[x[0], y[0]]), int(S.mul[x[1], y[1]])),
        (R.zero, S.zero), (R.one, S.one),
        name=f"{R.name or 'R'}x{S.name or 'S'}",
    )
    return ring


def upper_triangular_z2() -> tuple[FiniteRing, list]:
    """T2(Z2): matrices [[a, b], [0, c]] over Z2, 8 elements, noncommutative.

    Element values are triples (a, b, c).
    """
    elems = list(itertools.product(range(2), repeat=3))

    def add(x, y):
        return tuple((p + q) % 2 for p, q in zip(x, y))

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return (a * d % 2, (a * e + b * f) % 2, c * f % 2)

    return ring_from_operations(elems, add, mul, (0, 0, 0), (1, 0, 1), name="T2(Z2)")


# Bimodules
# ---------


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Abelian group with left and right actions of ``base``.

    ``lact[x, a]`` is x.a and ``ract[x, a]`` is a.x.
    """

    base: FiniteRing
    group: AbelianGroup
    lact: np.ndarray
    ract: np.ndarray
    name: str = ""

    @property
    def add(self) -> np.ndarray:
        return self.group.add

    @property
    def zero(self) -> int:
        return self.group.zero

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"<Bimodule {self.name or 'M'} over {self.base.name or 'R'} order={self.order}>"


def check_actions(ring_mul, ring_one, ring_add, group: AbelianGroup, lact, ract) -> None:
    """Exhaustive bimodule-action laws over an object monoid acting on ``group``.

    ``ring_add`` may be None when the acting set has no addition to respect.
    """
    n, m = lact.shape
    gadd = group.add
    x, a, b = np.ix_(range(n), range(m), range(m))
    _check("left action additive", lact[x, gadd[a, b]] != gadd[lact[x, a], lact[x, b]])
    _check("right action additive", ract[x, gadd[a, b]] != gadd[ract[x, a], ract[x, b]])
    x, y, a = np.ix_(range(n), range(n), range(m))
    _check("left action multiplicative", lact[ring_mul[x, y], a] != lact[x, lact[y, a]],
           "(x.y).a != x.(y.a)")
    _check("right action multiplicative", ract[ring_mul[x, y], a] != ract[y, ract[x, a]],
           "a.(x.y) != (a.x).y")
    _check("actions commute", lact[x, ract[y, a]] != ract[y, lact[x, a]], "x.(a.y) != (x.a).y")
    ident = np.arange(m)
    _check("left unit action", lact[ring_one] != ident)
    _check("right unit action", ract[ring_one] != ident)
    if ring_add is not None:
        _check("left action additive in ring", lact[ring_add[x, y], a] != gadd[lact[x, a], lact[y, a]])
        _check("right action additive in ring", ract[ring_add[x, y], a] != gadd[ract[x, a], ract[y, a]])


def make_bimodule(R: FiniteRing, add, zero: int, lact, ract, *, name: str = "",
                  max_size: int = DEFAULT_CAPS.max_module) -> Bimodule:
    m = len(add)
    if m > max_size:
        raise ResourceRefusal(f"module of order {m} exceeds cap {max_size}", m)
    group = make_abelian_group(add, zero)
    lact = as_table(lact, (R.order, m), "lact", m)
    ract = as_table(ract, (R.order, m), "ract", m)
    check_actions(R.mul, R.one, R.add, group, lact, ract)
    return Bimodule(R, group, lact, ract, name)


def regular_bimodule(R: FiniteRing) -> Bimodule:
    return make_bimodule(R, R.add, R.zero, R.mul, R.mul.T, name=R.name)


def zn_bimodule(R: FiniteRing, m: int) -> Bimodule:
    """Z_m with both actions by ``x.a = x*a mod m``, where ring index x is read as an integer.

    Meant for R = Z_n with m dividing n (e.g. Z4 acting on Z2 by reduction).
    """
    g = make_zn_group(m)
    act = (np.arange(R.order)[:, None] * np.arange(m)[None, :]) % m
    return make_bimodule(R, g.add, 0, act, act, name=f"Z{m}")


# Homomorphisms
# -------------


@dataclass(frozen=True, eq=False)
class RingHom:
    src: FiniteRing
    dst: FiniteRing
    map: np.ndarray

    def __call__(self, x):
        return self.map[x]

    def image(self) -> list[int]:
        return sorted(set(int(v) for v in self.map))


@dataclass(frozen=True, eq=False)
class GroupHom:
    src: AbelianGroup
    dst: AbelianGroup
    map: np.ndarray

    def __call__(self, a):
        return self.map[a]

    def image(self) -> list[int]:
        return sorted(set(int(v) for v in self.map))


def make_group_hom(src: AbelianGroup, dst: AbelianGroup, mapping) -> GroupHom:
    f = as_table(mapping, (src.order,), "map", dst.order)
    a, b = np.ix_(src.elements, src.elements)
    _check("hom additivity", f[src.add[a, b]] != dst.add[f[a], f[b]])
    if f[src.zero] != dst.zero:
        raise AxiomError("hom preserves zero", (src.zero,))
    return GroupHom(src, dst, f)


def make_ring_hom(src: FiniteRing, dst: FiniteRing, mapping) -> RingHom:
    """Unital ring hom; p(0) = 0 and p(1) = 1 are enforced."""
    f = as_table(mapping, (src.order,), "map", dst.order)
    a, b = np.ix_(src.elements, src.elements)
    _check("hom additivity", f[src.add[a, b]] != dst.add[f[a], f[b]])
    _check("hom multiplicativity", f[src.mul[a, b]] != dst.mul[f[a], f[b]])
    if f[src.zero] != dst.zero:
        raise AxiomError("hom preserves zero", (src.zero,))
    if f[src.one] != dst.one:
        raise AxiomError("hom preserves one", (src.one,))
    return RingHom(src, dst, f)


# Centralizers
# ------------


def centralizer_in_ring(R: FiniteRing, S: Iterable[int]) -> list[int]:
    """Elements r with r.s = s.r for every s in ``S``, sorted."""
    S = np.array(sorted(set(int(s) for s in S)), dtype=np.int64)
    if S.size == 0:
        return list(R.elements)
    r = np.arange(R.order)[:, None]
    ok = np.all(R.mul[r, S[None, :]] == R.mul[S[None, :], r], axis=1)
    return [int(i) for i in np.flatnonzero(ok)]


def centralizer_in_module(M: Bimodule, S: Iterable[int]) -> list[int]:
    """Elements a with s.a = a.s for every ring element s in ``S``, sorted."""
    S = np.array(sorted(set(int(s) for s in S)), dtype=np.int64)
    if S.size == 0:
        return list(M.elements)
    ok = np.all(M.lact[S][:, :] == M.ract[S][:, :], axis=0)
    return [int(i) for i in np.flatnonzero(ok)]


def is_subgroup(G: AbelianGroup, subset: Iterable[int]) -> bool:
    s = set(int(a) for a in subset)
    if G.zero not in s:
        return False
    return all(int(G.add[a, b]) in s for a in s for b in s) and all(int(G.neg[a]) in s for a in s)


def is_subring(R: FiniteRing, subset: Iterable[int]) -> bool:
    s = set(int(a) for a in subset)
    return (is_subgroup(R.group, s) and R.one in s
            and all(int(R.mul[a, b]) in s for a in s for b in s))
