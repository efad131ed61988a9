import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from anncat.algebra import (centralizer_in_module, centralizer_in_ring, is_subgroup, is_subring,
                            make_bimodule, make_group_hom, make_ring_hom, make_table_ring, make_zn,
                            make_zn_group, product_ring, regular_bimodule, upper_triangular_z2,
                            zn_bimodule)
from anncat.errors import AxiomError, ResourceRefusal, StructureError


def test_zn_arithmetic():
    Z4 = make_zn(4)
    assert Z4.order == 4
    assert Z4.add[2, 3] == 1
    assert Z4.mul[2, 3] == 2
    assert make_zn(2).add[1, 1] == 0


def test_zero_ring():
    Z1 = make_zn(1)
    assert Z1.order == 1
    assert Z1.one == Z1.zero == 0


def test_zn_rejects_nonpositive():
    with pytest.raises(StructureError):
        make_zn(0)


def test_product_ring_z2z2():
    Z2 = make_zn(2)
    R = product_ring(Z2, Z2)
    assert R.order == 4 and R.is_commutative()


def test_upper_triangular_is_noncommutative():
    T, elems = upper_triangular_z2()
    assert T.order == 8
    assert not T.is_commutative()
    assert elems[T.one] == (1, 0, 1)


def test_associativity_error_names_triple():
    Z3 = make_zn(3)
    mul = Z3.mul.copy()
    mul[1, 2], mul[2, 1] = 0, 0
    with pytest.raises(AxiomError) as err:
        make_table_ring(Z3.add, mul, 0, 1)
    a, b, c = err.value.witness
    assert mul[mul[a, b], c] != mul[a, mul[b, c]]


def test_identity_error():
    Z2 = make_zn(2)
    with pytest.raises(AxiomError):
        make_table_ring(Z2.add, Z2.mul, 0, 0)


def test_ring_cap():
    Z2 = make_zn(2)
    with pytest.raises(ResourceRefusal):
        make_table_ring(Z2.add, Z2.mul, max_size=1)


def test_bimodules():
    for n in (1, 2, 3, 4, 6):
        regular_bimodule(make_zn(n))
    M = zn_bimodule(make_zn(4), 2)
    assert M.order == 2
    assert M.lact[3, 1] == 1 and M.lact[2, 1] == 0


def test_non_additive_action_rejected():
    Z3 = make_zn(3)
    lact = Z3.mul.copy()
    lact[2] = [0, 1, 1]
    with pytest.raises(AxiomError):
        make_bimodule(Z3, Z3.add, 0, lact, Z3.mul.T)


def test_reduction_hom_and_bad_inclusion():
    Z4, Z2 = make_zn(4), make_zn(2)
    assert make_ring_hom(Z4, Z2, [0, 1, 0, 1]).image() == [0, 1]
    for n in (1, 2, 5):
        make_ring_hom(make_zn(n), make_zn(n), list(range(n)))
    with pytest.raises(AxiomError) as err:
        make_ring_hom(Z2, Z4, [0, 1])
    assert err.value.axiom == "hom additivity"
    assert err.value.witness == (1, 1)


def test_centralizers():
    Z6 = make_zn(6)
    assert centralizer_in_ring(Z6, [2, 3]) == list(range(6))
    assert centralizer_in_ring(Z6, []) == list(range(6))
    T, elems = upper_triangular_z2()
    cen = centralizer_in_ring(T, T.elements)
    assert sorted(elems[i] for i in cen) == [(0, 0, 0), (1, 0, 1)]
    assert cen == T.center()
    M = regular_bimodule(T)
    zc = centralizer_in_module(M, T.elements)
    assert sorted(elems[i] for i in zc) == [(0, 0, 0), (1, 0, 1)]
    assert centralizer_in_module(M, [T.one]) == list(T.elements)
    assert centralizer_in_module(regular_bimodule(Z6), Z6.elements) == list(range(6))


# Invariants


@given(st.sets(st.integers(0, 7)))
def test_centralizers_are_substructures(S):
    T, _ = upper_triangular_z2()
    assert is_subring(T, centralizer_in_ring(T, S))
    assert is_subgroup(T.group, centralizer_in_module(regular_bimodule(T), S))


@given(st.integers(1, 6), st.data())
def test_relabelled_zn_is_a_ring(n, data):
    perm = data.draw(st.permutations(range(n)))
    inv = np.argsort(perm)
    Z = make_zn(n)
    p = np.array(perm)
    add = p[Z.add[np.ix_(inv, inv)]]
    mul = p[Z.mul[np.ix_(inv, inv)]]
    R = make_table_ring(add, mul, int(p[0]), int(p[1 % n]))
    assert R.is_commutative()


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rejected_group_hom_witness_reproduces(n, m, data):
    f = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    G, H = make_zn_group(n), make_zn_group(m)
    try:
        make_group_hom(G, H, f)
    except AxiomError as err:
        if err.axiom == "hom additivity":
            a, b = err.witness
            assert f[G.add[a, b]] != H.add[f[a], f[b]]
        else:
            assert f[G.zero] != H.zero
    else:
        for a, b in itertools.product(range(n), repeat=2):
            assert f[G.add[a, b]] == H.add[f[a], f[b]]


@given(st.sampled_from([1, 2, 3, 4, 6]), st.data())
def test_zn_modules_for_divisors(n, data):
    m = data.draw(st.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    M = zn_bimodule(make_zn(n), m)
    assert M.order == m
