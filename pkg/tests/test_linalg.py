from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lyalg.linalg import (Tensor, compose_perms, contract_pairing, det, einsum, format_rational,
                          identity, inverse, parse_rational, permute, rank, switch, zeros)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def tensors(shape):
    n = int(np.prod(shape))
    return st.lists(fractions, min_size=n, max_size=n).map(lambda v: Tensor(v, shape))


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), (" 7/3 ", Fraction(7, 3)), (5, Fraction(5)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", True, None, 1.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(fractions)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(tensors((2, 3)), tensors((2, 3)), fractions)
def test_arithmetic_matches_fractions(a, b, c):
    fa, fb = a.to_fractions(), b.to_fractions()
    assert (a + b).to_fractions().tolist() == (fa + fb).tolist()
    assert (a - b).to_fractions().tolist() == (fa - fb).tolist()
    assert (a * c).to_fractions().tolist() == (fa * c).tolist()
    assert -(-a) == a


@given(tensors((2, 3)), tensors((3, 2)))
def test_einsum_matches_loops(a, b):
    got = einsum("ij,jk->ik", a, b).to_fractions()
    fa, fb = a.to_fractions(), b.to_fractions()
    for i, k in product(range(2), repeat=2):
        assert got[i, k] == sum(fa[i, j] * fb[j, k] for j in range(3))


def test_einsum_big_numbers_stay_exact():
    big = Tensor([[2**61, 2**61], [1, 1]])
    sq = einsum("ij,jk->ik", big, big).to_fractions()
    assert sq[0, 0] == 2**122 + 2**61


def test_common_denominator_reduced():
    t = Tensor(["1/2", "1/4", "3/4"])
    assert t.den == 4
    assert (t * 4).den == 1
    assert Tensor(["2/4"]).den == 2


def test_equality_and_hash_ignore_representation():
    a = Tensor(["1/2", "1"])
    b = Tensor([Fraction(2, 4), Fraction(2, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != Tensor(["1/2", "1", "0"])


@given(tensors((2, 2, 3)))
def test_permute_matches_numpy(t):
    assert permute(t, (2, 0, 1)).to_fractions().tolist() == \
        np.transpose(t.to_fractions(), (2, 0, 1)).tolist()


def test_switch_is_one_based():
    assert switch(3, 1, 2) == (1, 0, 2)
    with pytest.raises(ValueError):
        switch(3, 0, 1)


@given(tensors((2, 3, 4)), st.permutations(range(3)), st.permutations(range(3)))
def test_compose_perms_applies_left_first(t, p, q):
    assert permute(permute(t, p), q) == permute(t, compose_perms(p, q))


def test_det_inverse_rank():
    M = Tensor([[2, 1], [1, 1]])
    assert det(M) == 1
    assert einsum("ij,jk->ik", M, inverse(M)) == identity(2)
    assert rank(Tensor([[1, 2], [2, 4]])) == 1
    with pytest.raises(Exception):
        inverse(Tensor([[1, 2], [2, 4]]))


def test_contract_pairing():
    t = Tensor([[1, 2], [3, 4]])
    assert contract_pairing(t, [[1, 0], [0, 1]]) == 2


def test_zero_checks():
    assert zeros((2, 2)).is_zero()
    assert Tensor([0, "1/3"]).nonzero() == [((1,), Fraction(1, 3))]
