import numpy as np
import pytest
from hypothesis import given, strategies as st

from anncat.algebra import make_zn, upper_triangular_z2, regular_bimodule, zn_bimodule
from anncat.diagrams import Morphism, reevaluate
from anncat.errors import CompositionError, NotCertified, StructureError
from anncat.fixtures import strict_zn, twisted_z2z2, z4_on_z2
from anncat.presentation import (AXIOM_FAMILIES, BRAIDING_FAMILIES, check_axioms, check_braiding,
                                 from_rm, pi0, pi1)

FAMILIES = {f.name: f for f in AXIOM_FAMILIES}
BRAIDINGS = {f.name: f for f in BRAIDING_FAMILIES}


def z2(lam=None, eta=None):
    R = make_zn(2)
    return from_rm(R, zn_bimodule(R, 2), lam, eta)


def test_morphism_arithmetic():
    P = strict_zn(3)
    assert P.compose(P.mor(2, 1), P.mor(2, 2)) == Morphism(2, 0)
    assert P.compose(P.mor(1, 2), P.identity(1)) == Morphism(1, 2)
    with pytest.raises(CompositionError):
        P.compose(P.mor(1, 0), P.mor(2, 0))
    # (x,a)(y,b) = (xy, xb + ay)
    assert P.otimes_mor(P.mor(2, 1), P.mor(2, 2)) == Morphism(1, (2 * 2 + 1 * 2) % 3)
    assert P.otimes_mor(P.identity(2), P.identity(2)) == Morphism(1, 0)
    assert P.otimes_mor(P.mor(1, 1), P.mor(1, 1)) == Morphism(1, 2)


def test_build_v():
    assert strict_zn(2).build_v(1, 0, 1, 0).label == 0
    P = z2(eta=lambda x, y: x * y)
    assert P.build_v(1, 1, 1, 1).label == P.eta[1, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_strict_zn_passes(n):
    rep = check_axioms(strict_zn(n))
    assert rep.passed, rep.summary()
    assert len(rep.families) == len(AXIOM_FAMILIES)


def test_other_strict_presentations_pass():
    assert check_axioms(z4_on_z2()).passed
    assert check_axioms(twisted_z2z2()).passed
    T, _ = upper_triangular_z2()
    assert check_axioms(from_rm(T, regular_bimodule(T))).passed


def test_lambda_xyz_fails_ann2_at_all_ones():
    rep = check_axioms(z2(lam=lambda x, y, z: x * y * z))
    fam = rep.family("Ann-2 L^{AB} vs L^A L^B")
    assert not fam.passed
    assert fam.witness == (1, 1, 1, 1)
    assert fam.group == "ann-2"


def test_eta_xy_report():
    # the (A+B)(X+Y) diagram forces eta(1,1) = 0 on (Z2, Z2)
    rep = check_axioms(z2(eta=lambda x, y: x * y))
    assert [f.name for f in rep.failures] == ["Ann-2 (A+B)(X+Y) via v"]
    assert rep.failures[0].witness == (1, 1, 1, 1)
    assert rep.notes["eta_diagonal"] == [0, 1]


def test_malformed_lambda():
    R = make_zn(2)
    with pytest.raises(StructureError):
        from_rm(R, zn_bimodule(R, 2), np.zeros((2, 2)))
    with pytest.raises(StructureError):
        from_rm(R, zn_bimodule(R, 2), np.full((2, 2, 2), 5))


def test_module_over_other_ring():
    with pytest.raises(StructureError):
        from_rm(make_zn(2), zn_bimodule(make_zn(4), 2))


def test_pi0_pi1_of_strict():
    R = make_zn(4)
    P = from_rm(R, zn_bimodule(R, 2))
    assert np.array_equal(pi0(P).add, R.add) and np.array_equal(pi0(P).mul, R.mul)
    M = pi1(P)
    assert M.order == 2 and np.array_equal(M.lact, zn_bimodule(R, 2).lact)
    with pytest.raises(NotCertified):
        pi0(z2(lam=lambda x, y, z: x * y * z))


def test_braiding_checks():
    P = strict_zn(3)
    assert check_braiding(P, np.zeros((3, 3), int)).passed
    rep = check_braiding(strict_zn(2), [[0, 0], [0, 1]])
    assert not rep.family("braiding unit (I, x)").passed
    c = np.zeros((2, 2), int)
    c[0, 0] = 1
    rep = check_braiding(strict_zn(2), c)
    fam = rep.family("braiding c(O, O) = id")
    assert not fam.passed and fam.witness == ()


def test_braiding_ill_typed():
    T, _ = upper_triangular_z2()
    P = from_rm(T, regular_bimodule(T))
    rep = check_braiding(P, np.zeros((8, 8), int))
    assert not rep.families[0].passed
    assert all(not f.passed for f in rep.families)


# Invariants

lam_tables = st.lists(st.integers(0, 1), min_size=8, max_size=8).map(lambda v: np.array(v).reshape(2, 2, 2))
eta_tables = st.lists(st.integers(0, 1), min_size=4, max_size=4).map(lambda v: np.array(v).reshape(2, 2))


@given(lam_tables, eta_tables)
def test_witnesses_reproduce(lam, eta):
    P = z2(lam, eta)
    for f in check_axioms(P).failures:
        if f.witness is None:
            continue
        lhs, rhs = reevaluate(FAMILIES[f.name], P, f.witness)
        assert (lhs, rhs) == (f.lhs, f.rhs) and lhs != rhs


@given(st.lists(st.integers(0, 1), min_size=4, max_size=4))
def test_braiding_witnesses_reproduce(c):
    from anncat.presentation import _Braided

    P = strict_zn(2)
    c = np.array(c).reshape(2, 2)
    for f in check_braiding(P, c).failures:
        lhs, rhs = reevaluate(BRAIDINGS[f.name], _Braided(P, c), f.witness)
        assert lhs != rhs


@given(st.sampled_from([(1, 1), (2, 2), (3, 3), (4, 2), (4, 4), (6, 3), (6, 2), (5, 5)]))
def test_strict_presentations_always_pass(nm):
    n, m = nm
    R = make_zn(n)
    assert check_axioms(from_rm(R, zn_bimodule(R, m))).passed


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 3), st.integers(0, 3))
def test_interchange(x, y, a, a2, b, b2):
    P = strict_zn(4)
    f, f2, g, g2 = P.mor(x, a), P.mor(x, a2), P.mor(y, b), P.mor(y, b2)
    assert P.otimes_mor(P.compose(f2, f), P.compose(g2, g)) == \
        P.compose(P.otimes_mor(f2, g2), P.otimes_mor(f, g))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_involution_makes_v_self_inverse(v, z, seed):
    P = z4_on_z2()
    if check_axioms(P, families=[FAMILIES["c+ involutive"]]).passed:
        assert P.labels.add[P.eta[v, z], P.eta[z, v]] == P.labels.zero
