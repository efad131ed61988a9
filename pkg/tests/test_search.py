import numpy as np
import pytest
from hypothesis import given, strategies as st

from anncat.algebra import make_zn, zn_bimodule
from anncat.config import Caps
from anncat.errors import ResourceRefusal
from anncat.presentation import check_axioms, from_rm
from anncat.report import to_json
from anncat.search import candidate_presentation, decode_candidate, search, search_space_size

Z2 = make_zn(2)
M2 = zn_bimodule(Z2, 2)


@pytest.fixture(scope="module")
def z2_result():
    return search(Z2, M2)


def test_space_size():
    assert search_space_size(2, 2) == 4096
    assert search_space_size(4, 4) == 4 ** (64 + 16)


def test_z2_search(z2_result):
    assert z2_result.candidates == 4096
    assert 0 in z2_result.valid
    assert sum(z2_result.rejected_by.values()) + z2_result.count == 4096


def test_valid_candidates_recheck(z2_result):
    base = from_rm(Z2, M2)
    for i in z2_result.valid:
        assert check_axioms(candidate_presentation(base, i)).passed


def test_deterministic_across_workers(z2_result):
    base = from_rm(Z2, M2)
    one = to_json(z2_result.to_dict(base))
    assert to_json(search(Z2, M2, Caps(workers=2)).to_dict(base)) == one
    assert to_json(search(Z2, M2).to_dict(base)) == one


def test_refusal():
    Z4 = make_zn(4)
    with pytest.raises(ResourceRefusal) as err:
        search(Z4, zn_bimodule(Z4, 4))
    assert err.value.estimate == 4 ** 80


@given(st.integers(0, 4095))
def test_decode_roundtrip(i):
    lam, eta = decode_candidate(i, 2, 2)
    digits = list(lam.ravel()) + list(eta.ravel())
    assert int("".join(map(str, digits)), 2) == i


def test_lambda_xyz_is_a_candidate():
    lam = np.array([[[x * y * z for z in range(2)] for y in range(2)] for x in range(2)])
    idx = int("".join(map(str, list(lam.ravel()) + [0] * 4)), 2)
    got, _ = decode_candidate(idx, 2, 2)
    assert np.array_equal(got, lam)
    assert not check_axioms(candidate_presentation(from_rm(Z2, M2), idx)).passed
