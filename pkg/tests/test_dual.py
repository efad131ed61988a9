import numpy as np
import pytest
from hypothesis import given, strategies as st

from anncat.config import Caps
from anncat.dual import (brute_force_dual_objects, build_dual_category, center, closed_form_conditions,
                         dual_negate, dual_object_laws, dual_one, dual_product, dual_sum, dual_zero,
                         enumerate_dual_objects, forgetful_functor, is_dual_object_closed_form,
                         is_dual_object_diagrammatic, label_centralizer, membership_report,
                         object_centralizer, oracle_agreement)
from anncat.errors import ResourceRefusal, StructureError
from anncat.fixtures import coboundary_functor_z3, reduction_z4_z2, strict_zn, twisted_z2z2, z4_on_z2
from anncat.functor import check_functor, identity_functor
from anncat.presentation import check_axioms, check_braiding, pi0, pi1


def ident(P):
    return P, P, identity_functor(P)


FUNCTORED = [ident(strict_zn(n)) for n in (1, 2, 3, 4)] + [ident(z4_on_z2()), ident(twisted_z2z2())]
r = reduction_z4_z2()
FUNCTORED.append((r.A, r.B, r.F))
IDS = [F.dst.name + "<-" + F.src.name for _, _, F in FUNCTORED]


def test_closed_form_examples():
    A, B, F = ident(strict_zn(2))
    assert is_dual_object_closed_form(A, B, F, 0, (0, 0))
    assert not is_dual_object_closed_form(A, B, F, 1, (0, 1))
    assert not closed_form_conditions(A, B, F, 1, (0, 1))["u(r, 1) = 0"]
    assert is_dual_object_diagrammatic(A, B, F, 0, (0, 0))


@pytest.mark.parametrize("A,B,F", FUNCTORED, ids=IDS)
def test_zero_object_is_member(A, B, F):
    assert is_dual_object_diagrammatic(A, B, F, A.zero, (A.labels.zero,) * B.n_objects)


@pytest.mark.parametrize("A,B,F", FUNCTORED, ids=IDS)
def test_enumeration_matches_brute_force(A, B, F):
    assert enumerate_dual_objects(A, B, F) == brute_force_dual_objects(A, B, F)


def test_known_enumerations():
    A, B, F = ident(strict_zn(2))
    assert [d.key() for d in enumerate_dual_objects(A, B, F)] == [(0, (0, 0)), (1, (0, 0))]
    for n in range(1, 7):
        A, B, F = ident(strict_zn(n))
        assert [d.key() for d in enumerate_dual_objects(A, B, F)] == [(x, (0,) * n) for x in range(n)]


def test_twisted_center_objects():
    T = twisted_z2z2()
    F = identity_functor(T)
    objs = enumerate_dual_objects(T, T, F)
    # r in {0, 1}; u runs over the four derivations vanishing at 1
    assert sorted({d.r for d in objs}) == [T.zero, T.one]
    assert len(objs) == 8
    assert label_centralizer(T, F) == [0]
    assert object_centralizer(T, F) == [0, 1, 2, 3]


def test_enumeration_refuses_large_searches():
    # Z2 x Z2 needs one generator beside 1: 4 values of r times 4 values of u there
    A, B, F = ident(twisted_z2z2())
    with pytest.raises(ResourceRefusal) as err:
        enumerate_dual_objects(A, B, F, Caps(max_u_candidates=15))
    assert err.value.estimate == 4 * 4
    assert len(enumerate_dual_objects(A, B, F, Caps(max_u_candidates=16))) == 8
    with pytest.raises(ResourceRefusal):
        enumerate_dual_objects(A, B, F, Caps(max_free_dims=0))


def test_dual_arithmetic_on_z2():
    A, B, F = ident(strict_zn(2))
    one = dual_one(F)
    assert dual_negate(one).key() == (1, (0, 0))
    assert dual_sum(one, dual_negate(one)).key() == dual_zero(F).key()
    assert dual_product(one, one).key() == one.key()


def test_strict_sum_is_pointwise():
    A, B, F = ident(strict_zn(3))
    d, e = enumerate_dual_objects(A, B, F)[1:]
    s = dual_sum(d, e)
    assert s.r == (d.r + e.r) % 3
    assert s.u == tuple((a + b) % 3 for a, b in zip(d.u, e.u))


def test_mixed_fixtures_refused():
    d = dual_one(identity_functor(strict_zn(2)))
    e = dual_one(identity_functor(strict_zn(2)))
    with pytest.raises(StructureError):
        dual_sum(d, e)


@pytest.mark.parametrize("A,B,F", FUNCTORED, ids=IDS)
def test_dual_category_certified(A, B, F):
    D = build_dual_category(A, B, F)
    rep = check_axioms(D.presentation)
    assert rep.passed, rep.summary()
    assert all(ok for _, ok, _ in dual_object_laws(D.objects))
    assert check_functor(forgetful_functor(D)).passed
    # the hom labels are those commuting with every p(x)
    assert pi1(D.presentation, rep).order == len(label_centralizer(A, F))


def test_dual_of_strict_zn_has_pi0_zn():
    for n in (2, 3, 4):
        A, B, F = ident(strict_zn(n))
        D = build_dual_category(A, B, F)
        R = pi0(D.presentation)
        assert np.array_equal(R.add, A.oplus) and np.array_equal(R.mul, A.otimes)
        assert D.presentation.n_labels == n


def test_forgetful_functor_maps():
    r = reduction_z4_z2()
    D = build_dual_category(r.A, r.B, r.F)
    G = forgetful_functor(D)
    assert G.omap[D.presentation.zero] == r.A.zero
    for i, d in enumerate(D.objects):
        for j, e in enumerate(D.objects):
            assert G.omap[D.presentation.otimes[i, j]] == r.A.otimes[d.r, e.r]


@pytest.mark.parametrize("P", [strict_zn(2), strict_zn(3), z4_on_z2(), twisted_z2z2()], ids=lambda P: P.name)
def test_center_braiding(P):
    D, c = center(P)
    assert c.shape == (len(D.objects),) * 2
    assert check_braiding(D.presentation, c).passed
    one = D.index(dual_one(D.functor))
    assert np.all(c[:, one] == 0)
    if P.name == "(Z3,Z3)":
        assert len(D.objects) == 3 and not c.any()


def test_oracle_agreement_guarded_and_unguarded():
    for A, B, F in FUNCTORED:
        oa = oracle_agreement(A, B, F)
        assert oa.passed
        assert oa.checked == A.n_objects * A.n_labels ** B.n_objects
    T = twisted_z2z2()
    oa = oracle_agreement(T, T, identity_functor(T))
    assert len(oa.discrepancies) == 8 and not oa.guarded_discrepancies
    for d in oa.discrepancies:
        assert d.closed_form and not d.diagrammatic
        assert d.diagram_failures == ("u natural in X",)
        assert d.r in (1, 2)


def test_sum_mu_term_disagrees_with_diagrams():
    c = coboundary_functor_z3()
    summed = oracle_agreement(c.A, c.B, c.F)
    assert not summed.passed
    for d in summed.guarded_discrepancies:
        assert d.diagrammatic and not d.closed_form
        assert d.closed_form_failures == ("additive (mu r + r mu - lambda)",)
    assert oracle_agreement(c.A, c.B, c.F, convention="commutator").passed


def test_naturality_is_beyond_closed_form():
    T = twisted_z2z2()
    F = identity_functor(T)
    u = (0, 0, 0, 0)
    assert is_dual_object_closed_form(T, T, F, 1, u)
    rep = membership_report(T, T, F, 1, u)
    assert [f.name for f in rep.failures] == ["u natural in X"]


# Invariants


@given(st.sampled_from(range(len(FUNCTORED))), st.data())
def test_closure_under_operations(i, data):
    A, B, F = FUNCTORED[i]
    objs = enumerate_dual_objects(A, B, F)
    d = data.draw(st.sampled_from(objs))
    e = data.draw(st.sampled_from(objs))
    for out in (dual_sum(d, e), dual_product(d, e), dual_negate(d)):
        assert is_dual_object_diagrammatic(A, B, F, out.r, out.u)
    assert dual_sum(d, dual_zero(F)).key() == d.key()
    assert dual_product(dual_one(F), d).key() == d.key()


@given(st.sampled_from(range(len(FUNCTORED))), st.data())
def test_diagrammatic_members_pass_closed_form_under_guard(i, data):
    from anncat.dual import centralizes_label_image

    A, B, F = FUNCTORED[i]
    r = data.draw(st.integers(0, A.n_objects - 1))
    u = data.draw(st.lists(st.integers(0, A.n_labels - 1), min_size=B.n_objects, max_size=B.n_objects))
    if is_dual_object_diagrammatic(A, B, F, r, u):
        assert is_dual_object_closed_form(A, B, F, r, u)
    elif centralizes_label_image(A, F, r):
        assert not is_dual_object_closed_form(A, B, F, r, u)
