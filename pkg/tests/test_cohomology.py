import random

import numpy as np
import pytest
from hypothesis import given, settings

import gen
import oracles
from lyalg.cohomology import (Cochain, coboundary, coboundary_squared, is_derivation,
                              is_one_cocycle)
from lyalg.linalg import Tensor, zeros
from lyalg.representation import adjoint_rep, check_representation, coadjoint_rep, derived_D


def _unit(m, n, i, j):
    a = np.zeros((m, n), dtype=object)
    a[i, j] = 1
    return Tensor(a)


@pytest.mark.parametrize("alg", gen.BASES, ids=lambda a: a.name)
@pytest.mark.parametrize("which", ["adjoint", "coadjoint"])
def test_d_squared_vanishes_on_basis_cochains(alg, which):
    rep = adjoint_rep(alg) if which == "adjoint" else coadjoint_rep(alg)
    n = alg.dim
    for i in range(n):
        for j in range(n):
            assert coboundary_squared(Cochain(1, _unit(n, n, i, j)), rep).is_zero()


def test_inner_derivations_are_cocycles(dim4):
    # L(x, y) = [[x, y, .]] is a derivation of any LY algebra
    L = derived_D(adjoint_rep(dim4))
    for i in range(4):
        for j in range(4):
            assert is_derivation(L[i, j], dim4)
            assert is_one_cocycle(L[i, j], adjoint_rep(dim4))


def test_identity_is_not_a_derivation(dim2):
    f = Tensor(np.eye(2, dtype=int).astype(object))
    assert not is_derivation(f, dim2)
    assert not is_one_cocycle(f, adjoint_rep(dim2))


def test_cochain_validation():
    with pytest.raises(ValueError):
        Cochain(0, zeros((2, 2)))
    with pytest.raises(ValueError, match="skew"):
        Cochain(2, Tensor(np.ones((2, 2, 2), dtype=int)), zeros((2, 2, 2, 2)))
    with pytest.raises(ValueError, match="both"):
        Cochain(2, zeros((2, 2, 2)))
    assert Cochain.zero(3, 2, 1).is_zero()


def test_shape_mismatch(dim2):
    with pytest.raises(ValueError, match="does not match"):
        coboundary(Cochain(1, zeros((3, 2))), adjoint_rep(dim2))


@settings(max_examples=40, deadline=None)
@given(gen.algebras(), gen.seeds)
def test_derivation_iff_adjoint_cocycle(alg, seed):
    rng = random.Random(seed)
    n = alg.dim
    L = derived_D(adjoint_rep(alg))
    f = zeros((n, n))
    for _ in range(2):
        f = f + L[rng.randrange(n), rng.randrange(n)] * gen.rational(rng)
    if rng.random() < 0.5:
        f = gen.perturb(rng, f)
    assert is_derivation(f, alg) == is_one_cocycle(f, adjoint_rep(alg))


@settings(max_examples=25, deadline=None)
@given(gen.representations(), gen.seeds)
def test_d_squared_on_random_cochains(rep, seed):
    if not check_representation(rep).passed:
        return
    rng = random.Random(seed)
    f = Tensor([[gen.rational(rng, 0.5) for _ in range(rep.base.dim)] for _ in range(rep.vdim)])
    assert coboundary_squared(Cochain(1, f), rep).is_zero()


@settings(max_examples=25, deadline=None)
@given(gen.representations(), gen.seeds)
def test_one_cocycle_matches_loop_oracle(rep, seed):
    rng = random.Random(seed)
    L = derived_D(adjoint_rep(rep.base))
    n = rep.base.dim
    if rep.vdim == n and rng.random() < 0.5:
        f = L[rng.randrange(n), rng.randrange(n)]
    else:
        f = Tensor([[gen.rational(rng, 0.6) for _ in range(n)] for _ in range(rep.vdim)])
    assert is_one_cocycle(f, rep) == oracles.one_cocycle_ok(f, rep)
