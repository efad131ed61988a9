import numpy as np
import pytest
from hypothesis import given, strategies as st

from anncat.algebra import make_group_hom, make_ring_hom, make_zn
from anncat.diagrams import reevaluate
from anncat.errors import AxiomError, StructureError
from anncat.fixtures import coboundary_functor_z3, reduction_z4_z2, strict_zn, twisted_z2z2, z4_on_z2
from anncat.functor import (FUNCTOR_FAMILIES, compose_functors, check_functor, identity_functor,
                            make_functor, make_pq_functor)
from anncat.presentation import check_axioms, pi0

FAMILIES = {f.name: f for f in FUNCTOR_FAMILIES}


def reduction(n, m, mu=None, nu=None):
    B, A = strict_zn(n), strict_zn(m)
    red = [x % m for x in range(n)]
    return make_pq_functor(B, A, make_ring_hom(make_zn(n), make_zn(m), red),
                           make_group_hom(make_zn(n).group, make_zn(m).group, red), mu, nu)


@pytest.mark.parametrize("P", [strict_zn(2), strict_zn(6), z4_on_z2()], ids=lambda P: P.name)
def test_identity_functor_passes(P):
    F = identity_functor(P)
    assert check_functor(F).passed
    assert np.array_equal(F.omap[pi0(P).add], pi0(P).add)


def test_reduction_functor():
    rep = check_functor(reduction_z4_z2().F)
    assert rep.passed
    assert all(f.checked > 0 for f in rep.families)


def test_coboundary_functor_passes():
    assert check_functor(coboundary_functor_z3().F).passed


def test_intertwining_error():
    # swapping label coordinates does not commute with the twisted actions
    T = twisted_z2z2()
    with pytest.raises(AxiomError) as err:
        make_functor(T, T, [0, 1, 2, 3], [0, 2, 1, 3])
    assert err.value.axiom == "label map intertwines left actions"
    x, a = err.value.witness
    assert T.lact[x, [0, 2, 1, 3][a]] != [0, 2, 1, 3][T.lact[x, a]]
    with pytest.raises(AxiomError) as err:
        make_functor(strict_zn(4), strict_zn(2), [0, 1, 0, 1], [0, 0, 0, 1])
    assert err.value.axiom == "label map additive"


def test_shape_and_endpoint_errors():
    A = strict_zn(3)
    with pytest.raises(StructureError):
        make_functor(A, A, [0, 1], [0, 1, 2])
    with pytest.raises(AxiomError):
        make_functor(A, A, [0, 2, 1], [0, 1, 2])


@pytest.mark.parametrize("entry,family", [((1, 1), "F-breve compatible with a+"),
                                          ((0, 2), "F-breve unit (O, x)")])
def test_mu_perturbation_fails_oplus_family(entry, family):
    mu = np.zeros((4, 4), int)
    mu[entry] = 1
    F = reduction(4, 2, mu=mu)
    rep = check_functor(F)
    fam = rep.family(family)
    assert not fam.passed and fam.group == "oplus-functor"
    lhs, rhs = reevaluate(FAMILIES[family], F, fam.witness)
    assert lhs != rhs
    assert rep.in_group("functor") and all(f.passed for f in rep.in_group("functor"))


def test_composition_closure():
    F = reduction(8, 4)
    G = reduction(4, 2)
    assert F.dst is not G.src
    GF = compose_functors(G, F)
    assert check_functor(GF).passed
    assert np.array_equal(GF.omap, [x % 2 for x in range(8)])
    C = coboundary_functor_z3().F
    assert check_functor(compose_functors(C, C)).passed
    assert check_functor(compose_functors(identity_functor(C.dst), C)).passed
    with pytest.raises(StructureError):
        compose_functors(F, G)


@given(st.sampled_from([strict_zn(1), strict_zn(2), strict_zn(3), strict_zn(4), z4_on_z2()]))
def test_identity_passes_whenever_axioms_pass(P):
    assert check_axioms(P).passed
    assert check_functor(identity_functor(P)).passed


@given(st.lists(st.integers(0, 1), min_size=16, max_size=16))
def test_zero_or_witnessed(mu):
    F = reduction(4, 2, mu=np.array(mu).reshape(4, 4))
    for f in check_functor(F).failures:
        lhs, rhs = reevaluate(FAMILIES[f.name], F, f.witness)
        assert (lhs, rhs) == (f.lhs, f.rhs) and lhs != rhs
