"""Representations (V; rho, mu) of Lie-Yamaguti algebras.

Matrices act on coordinate columns: ``rho[i]`` is the m x m matrix of
rho(e_i) and ``mu[i, j]`` the matrix of mu(e_i, e_j).  A product such as
mu(x, z) rho(y) applies rho(y) first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LYAlgebra
from .checks import AxiomReport, IdentityResult
from .linalg import Tensor, einsum, permute, zeros

__all__ = [
    "Representation",
    "derived_D",
    "check_representation",
    "adjoint_rep",
    "dual_rep",
    "coadjoint_rep",
    "semidirect_product",
    "zero_rep",
]


@dataclass(frozen=True, eq=True)
class Representation:
    base: LYAlgebra
    rho: Tensor
    mu: Tensor

    def __post_init__(self):
        n, m = self.base.dim, self.vdim
        if self.rho.shape != (n, m, m):
            raise ValueError(f"rho must have shape {(n, m, m)}, got {self.rho.shape}")
        if self.mu.shape != (n, n, m, m):
            raise ValueError(f"mu must have shape {(n, n, m, m)}, got {self.mu.shape}")

    @property
    def vdim(self) -> int:
        return self.rho.shape[1]

    @property
    def D(self) -> Tensor:
        return derived_D(self)


def zero_rep(alg: LYAlgebra, vdim: int) -> Representation:
    n = alg.dim
    return Representation(alg, zeros((n, vdim, vdim)), zeros((n, n, vdim, vdim)))


def derived_D(rep: Representation) -> Tensor:
    """D(x,y) = mu(y,x) - mu(x,y) + [rho(x), rho(y)] - rho([x,y])."""
    rho, mu, B = rep.rho, rep.mu, rep.base.binary
    comm = einsum("xpa,yaq->xypq", rho, rho)
    return (permute(mu, (1, 0, 2, 3)) - mu + comm - permute(comm, (1, 0, 2, 3))
            - einsum("xya,apq->xypq", B, rho))


def check_representation(rep: Representation) -> AxiomReport:
    """The five representation axioms plus three of their consequences."""
    rho, mu = rep.rho, rep.mu
    B, T = rep.base.binary, rep.base.ternary
    D = derived_D(rep)

    ax1 = (einsum("xya,azpq->xyzpq", B, mu)
           - einsum("xzpa,yaq->xyzpq", mu, rho)
           + einsum("yzpa,xaq->xyzpq", mu, rho))
    ax2 = (einsum("yza,xapq->xyzpq", B, mu)
           - einsum("ypa,xzaq->xyzpq", rho, mu)
           + einsum("zpa,xyaq->xyzpq", rho, mu))
    ax3 = (einsum("xyza,apq->xyzpq", T, rho)
           - einsum("xypa,zaq->xyzpq", D, rho)
           + einsum("zpa,xyaq->xyzpq", rho, D))
    ax4 = (einsum("zwpa,xyaq->xyzwpq", mu, mu)
           - einsum("ywpa,xzaq->xyzwpq", mu, mu)
           - einsum("yzwa,xapq->xyzwpq", T, mu)
           + einsum("yzpa,xwaq->xyzwpq", D, mu))
    ax5 = (einsum("xyza,awpq->xyzwpq", T, mu)
           + einsum("xywa,zapq->xyzwpq", T, mu)
           - einsum("xypa,zwaq->xyzwpq", D, mu)
           + einsum("zwpa,xyaq->xyzwpq", mu, D))

    c1 = einsum("xya,azpq->xyzpq", B, D)
    c1 = c1 + permute(c1, (2, 0, 1, 3, 4)) + permute(c1, (1, 2, 0, 3, 4))
    c2 = (einsum("xyza,awpq->xyzwpq", T, D)
          + einsum("xywa,zapq->xyzwpq", T, D)
          - einsum("xypa,zwaq->xyzwpq", D, D)
          + einsum("zwpa,xyaq->xyzwpq", D, D))
    c3 = (einsum("xyza,awpq->xyzwpq", T, mu)
          - einsum("xwpa,zyaq->xyzwpq", mu, mu)
          + einsum("ywpa,zxaq->xyzwpq", mu, mu)
          + einsum("zwpa,xyaq->xyzwpq", mu, D))
    return AxiomReport("representation", [
        IdentityResult("mu_bracket_first", ax1),
        IdentityResult("mu_bracket_second", ax2),
        IdentityResult("rho_triple", ax3),
        IdentityResult("mu_mu", ax4),
        IdentityResult("mu_triple_derivation", ax5),
        IdentityResult("D_cyclic", c1, consequence=True),
        IdentityResult("D_triple_derivation", c2, consequence=True),
        IdentityResult("mu_triple_expansion", c3, consequence=True),
    ])


def adjoint_rep(alg: LYAlgebra) -> Representation:
    """ad_x z = [x, z] and R(x, y) z = [[z, x, y]]; D is then L(x, y) z = [[x, y, z]]."""
    rho = permute(alg.binary, (0, 2, 1))          # rho[i, p, q] = B[i, q, p]
    mu = permute(alg.ternary, (1, 2, 3, 0))       # mu[i, j, p, q] = T[q, i, j, p]
    return Representation(alg, rho, mu)


def dual_rep(rep: Representation) -> Representation:
    """(V*; rho*, -mu* tau) with rho*(x) = -rho(x)^T and (-mu* tau)(x, y) = mu(y, x)^T."""
    rho = -permute(rep.rho, (0, 2, 1))
    mu = permute(rep.mu, (1, 0, 3, 2))
    return Representation(rep.base, rho, mu)


def coadjoint_rep(alg: LYAlgebra) -> Representation:
    rep = dual_rep(adjoint_rep(alg))
    # <L*(x,y) a, z> = -<a, [[x,y,z]]>: column q of L*(x,y) is the image of e_q^*
    expected = -alg.ternary
    if derived_D(rep) != expected:
        raise ArithmeticError("coadjoint D disagrees with the dual of L")
    return rep


def semidirect_product(alg: LYAlgebra, rep: Representation, name: str = "") -> LYAlgebra:
    """LY structure on g + V; a valid LY algebra exactly when ``rep`` is a representation."""
    n, m = alg.dim, rep.vdim
    N = n + m
    B = np.zeros((N,) * 3, dtype=object)
    T = np.zeros((N,) * 4, dtype=object)
    Bf = alg.binary.to_fractions()
    Tf = alg.ternary.to_fractions()
    rho = rep.rho.to_fractions()
    mu = rep.mu.to_fractions()
    D = derived_D(rep).to_fractions()
    B[:n, :n, :n] = Bf
    T[:n, :n, :n, :n] = Tf
    for i in range(n):
        # [x, v] = rho(x) v and [u, y] = -rho(y) u
        B[i, n:, n:] = rho[i].T
        B[n:, i, n:] = -rho[i].T
        for j in range(n):
            # [[x, y, w]] = D(x,y) w
            T[i, j, n:, n:] = D[i, j].T
            # [[u, y, z]] = mu(y, z) u
            T[n:, i, j, n:] = mu[i, j].T
            # [[x, v, z]] = -mu(x, z) v
            T[i, n:, j, n:] = -mu[i, j].T
    return LYAlgebra(Tensor(B), Tensor(T), name or f"{alg.name or 'g'}+V")
