import random

import pytest
from hypothesis import given, settings

import gen
import oracles
from lyalg.algebra import (LYAlgebra, abelian, check_homomorphism, check_ly_axioms,
                           evaluate_brackets, from_lie_algebra, jacobi_residual)
from lyalg.linalg import Tensor, identity


def test_dim2_brackets(dim2):
    e1, e2 = [1, 0], [0, 1]
    assert dim2.bracket(e1, e2) == Tensor([1, 0])
    assert dim2.bracket(e2, e1) == Tensor([-1, 0])
    assert dim2.triple(e1, e2, e2) == Tensor([1, 0])
    assert dim2.triple(e2, e1, e2) == Tensor([-1, 0])
    assert dim2.triple(e1, e2, e1).is_zero()


def test_bases_are_ly():
    for alg in gen.BASES:
        assert check_ly_axioms(alg).passed, alg.name


def test_from_constants_rejects_conflicts():
    with pytest.raises(ValueError, match="conflicting"):
        LYAlgebra.from_constants(2, [(0, 1, 0, 1), (1, 0, 0, 1)])
    with pytest.raises(ValueError, match="skew"):
        LYAlgebra.from_constants(2, [(0, 0, 1, 1)])
    with pytest.raises(IndexError):
        LYAlgebra.from_constants(2, [(0, 2, 1, 1)])


def test_constructor_rejects_nonskew():
    B = Tensor([[[0, 0], [1, 0]], [[0, 0], [0, 0]]])
    with pytest.raises(ValueError, match="skew"):
        LYAlgebra(B, abelian(2).ternary)


def test_evaluate_brackets_arity(dim2):
    with pytest.raises(ValueError):
        evaluate_brackets(dim2, [1, 0])
    with pytest.raises(ValueError):
        evaluate_brackets(dim2, [1, 0, 0], [0, 1])


def test_from_lie_algebra_checks_jacobi():
    bad = LYAlgebra.from_constants(3, [(0, 1, 2, 1), (0, 2, 0, 1)]).binary
    assert not jacobi_residual(bad).is_zero()
    with pytest.raises(ValueError, match="Jacobi"):
        from_lie_algebra(bad)


def test_broken_fundamental_identity_is_named():
    # perturbing one ternary constant of dim2 breaks some identities
    alg = LYAlgebra.from_constants(2, [(0, 1, 0, 1)], [(0, 1, 1, 0, 1), (0, 1, 0, 1, 1)])
    report = check_ly_axioms(alg)
    assert not report.passed
    assert set(report.failures()) == oracles.ly_failures(oracles.arr(alg.binary),
                                                         oracles.arr(alg.ternary))


def test_homomorphism(dim2):
    assert check_homomorphism(identity(2), dim2, dim2)
    assert not check_homomorphism(Tensor([[0, 1], [1, 0]]), dim2, dim2)


@settings(max_examples=30, deadline=None)
@given(gen.algebras())
def test_ly_axioms_survive_change_of_basis(alg):
    assert check_ly_axioms(alg).passed


@settings(max_examples=25, deadline=None)
@given(gen.seeds)
def test_axiom_verdicts_match_loop_oracle(seed):
    rng = random.Random(seed)
    alg = rng.choice(gen.SMALL)
    B, T = alg.binary, alg.ternary
    if rng.random() < 0.5:
        B = gen.perturb(rng, B)
        B = (B - B.permute((1, 0, 2))) * "1/2"
    if rng.random() < 0.5:
        T = gen.perturb(rng, T)
        T = (T - T.permute((1, 0, 2, 3))) * "1/2"
    cand = LYAlgebra(B, T)
    expected = oracles.ly_failures(oracles.arr(B), oracles.arr(T))
    assert set(check_ly_axioms(cand).failures()) == expected
