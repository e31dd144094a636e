import itertools

import pytest

import oracles
from lyalg import io
from lyalg.algebra import check_ly_axioms
from lyalg.linalg import Tensor, zeros
from lyalg.pre_ly import (PreLY, ad_r_representation, canonical_rmatrix, check_pre_ly_axioms,
                          d_braces, identity_is_rota_baxter, search_pre_ly, sub_adjacent)
from lyalg.representation import check_representation
from lyalg.yang_baxter import is_cybe_solution


@pytest.fixture(scope="module")
def found():
    return list(itertools.islice(search_pre_ly(2, triple_support=1), 60))


def test_fixture_is_pre_ly_with_both_brackets():
    A = io.load("prely_dim2")
    assert check_pre_ly_axioms(A).passed
    g = sub_adjacent(A)
    assert not g.binary.is_zero() and not g.ternary.is_zero()
    assert oracles.is_ly(g)


def test_fixture_consequences():
    A = io.load("prely_dim2")
    assert check_representation(ad_r_representation(A)).passed
    assert identity_is_rota_baxter(A)
    r = canonical_rmatrix(A)
    assert r.is_skew() and r.is_nondegenerate()
    assert is_cybe_solution(r)


def test_sub_adjacent_rejects_invalid():
    # e1 * e2 = e1 alone breaks pre7
    bad = PreLY(Tensor([[[0, 0], [1, 0]], [[0, 0], [0, 0]]]), zeros((2,) * 4))
    assert check_pre_ly_axioms(bad).failures() == ["pre7"]
    with pytest.raises(ValueError, match="not a pre-LY"):
        sub_adjacent(bad)


def test_shape_validation():
    with pytest.raises(ValueError):
        PreLY(zeros((2, 2, 2)), zeros((2, 2, 2)))


def test_d_braces_on_fixture():
    A = io.load("prely_dim2")
    D = d_braces(A)
    # the sub-adjacent triple is D + {x,y,z} - {y,x,z}
    T = D + A.triple - A.triple.permute((1, 0, 2, 3))
    assert sub_adjacent(A).ternary == T


def test_search_results_carry_every_consequence(found):
    assert len(found) == 60
    for A in found:
        assert check_ly_axioms(sub_adjacent(A)).passed
        assert check_representation(ad_r_representation(A)).passed
        assert identity_is_rota_baxter(A)
        assert is_cybe_solution(canonical_rmatrix(A))
