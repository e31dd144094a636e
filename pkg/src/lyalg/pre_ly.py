"""Pre-Lie-Yamaguti algebras and the structures they induce.

``star[i, j, k]`` is the e_k coefficient of e_i * e_j and ``triple[i, j, k, l]``
the e_l coefficient of {e_i, e_j, e_k}.  No symmetry is assumed for either.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .algebra import LYAlgebra
from .checks import AxiomReport, IdentityResult
from .linalg import Tensor, einsum, identity, permute
from .representation import Representation, dual_rep, semidirect_product
from .yang_baxter import TwoTensor, check_relative_rb

__all__ = [
    "PreLY",
    "check_pre_ly_axioms",
    "sub_adjacent",
    "ad_r_representation",
    "canonical_rmatrix",
    "search_pre_ly",
    "d_braces",
    "identity_is_rota_baxter",
]


@dataclass(frozen=True)
class PreLY:
    star: Tensor
    triple: Tensor
    name: str = ""

    def __post_init__(self):
        n = self.star.shape[0] if self.star.ndim else 0
        if n <= 0 or self.star.shape != (n, n, n):
            raise ValueError(f"star product must have shape (n, n, n), got {self.star.shape}")
        if self.triple.shape != (n,) * 4:
            raise ValueError(f"triple product must have shape {(n,) * 4}, got {self.triple.shape}")

    @property
    def dim(self) -> int:
        return self.star.shape[0]


def _derived(S, P, es):
    """Commutator C, associator and the D-braces, for Tensor or integer arrays."""
    C = S - es("yxo->xyo", S)
    assoc = es("xya,azo->xyzo", S, S) - es("yza,xao->xyzo", S, S)
    PD = (es("zyxo->xyzo", P) - es("zxyo->xyzo", P)
          + es("yxzo->xyzo", assoc) - assoc)
    return C, PD


def _identities(S, P, es) -> dict:
    """Residuals of the five pre-LY identities; each is affine in P except pre5, pre6."""
    C, PD = _derived(S, P, es)
    Psw = es("yxzo->xyzo", P)
    pre2 = (es("xya,zawo->xyzwo", C, P) - es("yza,axwo->xyzwo", S, P)
            + es("xza,aywo->xyzwo", S, P))
    pre4 = (es("zwa,xyao->xyzwo", C, P) - es("xywa,zao->xyzwo", P, S)
            + es("xyza,wao->xyzwo", P, S))
    pre7 = (es("xyza,awo->xyzwo", PD + P - Psw, S)
            - es("zwa,xyao->xyzwo", S, PD) + es("xywa,zao->xyzwo", PD, S))
    return {"pre2": pre2, "pre4": pre4, "pre7": pre7,
            "pre5": lambda: _pre5(P, PD, es), "pre6": lambda: _pre6(P, PD, Psw, es)}


def _pre5(P, PD, es):
    return (es("xyza,awto->xyzwto", P, P) - es("xywa,azto->xyzwto", P, P)
            - es("zwta,xyao->xyzwto", PD, P) - es("zwta,xyao->xyzwto", P, P)
            + es("wzta,xyao->xyzwto", P, P) + es("xyta,zwao->xyzwto", P, PD))


def _pre6(P, PD, Psw, es):
    Q = PD + P - Psw
    return (es("xywa,zato->xyzwto", Q, P) + es("xyta,zwao->xyzwto", Q, P)
            - es("zwta,xyao->xyzwto", P, PD) + es("xyza,awto->xyzwto", PD, P))


_ORDER = ("pre2", "pre4", "pre5", "pre6", "pre7")


def check_pre_ly_axioms(A: PreLY) -> AxiomReport:
    ids = _identities(A.star, A.triple, einsum)
    return AxiomReport(A.name or "pre-LY", [
        IdentityResult(k, ids[k]() if callable(ids[k]) else ids[k]) for k in _ORDER
    ])


def d_braces(A: PreLY) -> Tensor:
    """{x,y,z}_D = {z,y,x} - {z,x,y} + (y,x,z) - (x,y,z)."""
    return _derived(A.star, A.triple, einsum)[1]


def sub_adjacent(A: PreLY, validate: bool = True) -> LYAlgebra:
    """[x,y]_C = x*y - y*x and [[x,y,z]]_C = {x,y,z}_D + {x,y,z} - {y,x,z}."""
    if validate:
        report = check_pre_ly_axioms(A)
        if not report.passed:
            raise ValueError(f"not a pre-LY algebra: fails {report.failures()}")
    C, PD = _derived(A.star, A.triple, einsum)
    T = PD + A.triple - permute(A.triple, (1, 0, 2, 3))
    return LYAlgebra(C, T, f"{A.name or 'A'}^c")


def ad_r_representation(A: PreLY, validate: bool = True) -> Representation:
    """(A; Ad, R) with Ad_x z = x*z and R(x,y)z = {z,x,y}."""
    base = sub_adjacent(A, validate)
    rho = permute(A.star, (0, 2, 1))
    mu = permute(A.triple, (1, 2, 3, 0))
    return Representation(base, rho, mu)


def canonical_rmatrix(A: PreLY) -> TwoTensor:
    """r = sum_i e_i (x) e_i^* - e_i^* (x) e_i on A^c + A* (A first, then A*)."""
    rep = ad_r_representation(A)
    big = semidirect_product(rep.base, dual_rep(rep), f"{rep.base.name}+A*")
    n = A.dim
    R = np.zeros((2 * n, 2 * n), dtype=object)
    for i in range(n):
        R[i, n + i] = 1
        R[n + i, i] = -1
    return TwoTensor(big, Tensor(R))


def _int_es(subscripts, *ops):
    return np.einsum(subscripts, *ops)


def _affine_parts(S: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(b, M) with the flattened pre2/pre4/pre7 residual equal to b + M @ vec(P)."""
    def res(P):
        ids = _identities(S, P, _int_es)
        return np.concatenate([ids[k].ravel() for k in ("pre2", "pre4", "pre7")])

    zero = np.zeros((n,) * 4, dtype=np.int64)
    b = res(zero)
    cols = []
    for k in range(n ** 4):
        E = zero.copy()
        E.flat[k] = 1
        cols.append(res(E) - b)
    return b, np.stack(cols, axis=1)


def _sparse_vectors(size: int, values, support: int) -> np.ndarray:
    nz = [v for v in values if v != 0]
    out = [np.zeros(size, dtype=np.int64)]
    for s in range(1, support + 1):
        for pos in itertools.combinations(range(size), s):
            for vals in itertools.product(nz, repeat=s):
                v = np.zeros(size, dtype=np.int64)
                v[list(pos)] = vals
                out.append(v)
    return np.stack(out)


def search_pre_ly(dim: int = 2, values=(-1, 0, 1), triple_support: int = 2,
                  accept: Callable[[PreLY], bool] | None = None) -> Iterator[PreLY]:
    """Yield pre-LY algebras with star constants in ``values`` and sparse triples.

    For fixed star the identities pre2, pre4, pre7 are affine in the triple, so
    candidate triples are screened with one integer matrix product before the
    exact quadratic checks.
    """
    n = dim
    triples = _sparse_vectors(n ** 4, values, triple_support)
    for svals in itertools.product(values, repeat=n ** 3):
        S = np.array(svals, dtype=np.int64).reshape((n,) * 3)
        b, M = _affine_parts(S, n)
        ok = ~np.any(triples @ M.T + b, axis=1)
        for t in triples[ok]:
            cand = PreLY(Tensor(S.astype(object)), Tensor(t.reshape((n,) * 4).astype(object)))
            if check_pre_ly_axioms(cand).passed and (accept is None or accept(cand)):
                yield cand


def identity_is_rota_baxter(A: PreLY) -> bool:
    return bool(check_relative_rb(identity(A.dim), ad_r_representation(A)))
