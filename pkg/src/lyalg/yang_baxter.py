"""2-tensors, the classical Yang-Baxter equation and relative Rota-Baxter operators.

A 2-tensor r = sum R[a, b] e_a (x) e_b is stored as the matrix R.  In the
expanded sums r = sum_i x_i (x) y_i, the term index i is the pair (a, b) with
x_i = e_a and y_i = R[a, b] e_b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LYAlgebra
from .checks import AxiomReport, IdentityResult
from .linalg import Tensor, det, einsum, inverse
from .representation import (Representation, adjoint_rep, coadjoint_rep, derived_D,
                             dual_rep, semidirect_product)

__all__ = [
    "TwoTensor",
    "r_sharp",
    "bracket_rr",
    "triple_rrr",
    "is_cybe_solution",
    "CYBEResult",
    "Agreement",
    "InducedCobracket",
    "rb_residuals",
    "check_relative_rb",
    "cybe_rb_equivalence",
    "induced_cobrackets",
    "induced_dual_brackets",
    "symplectic_check",
    "lift_rb_to_rmatrix",
    "QuadraticLY",
    "check_quadratic",
    "b_natural",
    "sts_transfer",
]


@dataclass(frozen=True)
class TwoTensor:
    alg: LYAlgebra
    coeffs: Tensor

    def __post_init__(self):
        n = self.alg.dim
        if self.coeffs.shape != (n, n):
            raise ValueError(f"2-tensor must be {n} x {n}, got {self.coeffs.shape}")

    def is_skew(self) -> bool:
        return self.coeffs == -self.coeffs.T

    def is_nondegenerate(self) -> bool:
        return det(self.coeffs) != 0


def r_sharp(r: TwoTensor) -> Tensor:
    """<r#(xi), eta> = <r, xi (x) eta>; column i is r#(e_i^*), so the matrix is R^T."""
    return r.coeffs.T


def bracket_rr(r: TwoTensor) -> Tensor:
    """sum [x_i,x_j](x)y_i(x)y_j + x_i(x)[y_i,x_j](x)y_j + x_i(x)x_j(x)[y_i,y_j]."""
    R, B = r.coeffs, r.alg.binary
    return (einsum("ij,kl,iko->ojl", R, R, B)
            + einsum("ij,kl,jko->iol", R, R, B)
            + einsum("ij,kl,jlo->iko", R, R, B))


def triple_rrr(r: TwoTensor) -> Tensor:
    """[[r13,r41,r12]] + [[r42,r23,r21]] + [[r31,r32,r43]] + [[r41,r42,r43]] in (x)^4 g.

    With i = (p,q), j = (s,u), k = (v,w), i.e. x_i = e_p, y_i = R[p,q] e_q:
      [[x_i,y_k,x_j]] (x) y_j (x) y_i (x) x_k
      y_j (x) [[y_k,x_i,x_j]] (x) y_i (x) x_k
      y_i (x) y_j (x) [[x_i,x_j,y_k]] (x) x_k
      y_i (x) y_j (x) y_k (x) [[x_i,x_j,x_k]]
    """
    R, T = r.coeffs, r.alg.ternary
    return (einsum("pq,su,vw,pwso->ouqv", R, R, R, T)
            + einsum("pq,su,vw,wpso->uoqv", R, R, R, T)
            + einsum("pq,su,vw,pswo->quov", R, R, R, T)
            + einsum("pq,su,vw,psvo->quwo", R, R, R, T))


@dataclass(frozen=True)
class CYBEResult:
    binary: Tensor
    ternary: Tensor

    @property
    def solved(self) -> bool:
        return self.binary.is_zero() and self.ternary.is_zero()

    def __bool__(self) -> bool:
        return self.solved


def is_cybe_solution(r: TwoTensor) -> CYBEResult:
    """Truthy iff [r,r] = 0 and [[r,r,r]] = 0; carries both residuals."""
    return CYBEResult(bracket_rr(r), triple_rrr(r))


def rb_residuals(T: Tensor, rep: Representation) -> tuple[Tensor, Tensor]:
    """(O2[u,v,o], O1[u,v,w,o]) for T: V -> g given as a dim x vdim matrix.

    O2(u,v) = [Tu,Tv] - T(rho(Tu)v - rho(Tv)u)
    O1(u,v,w) = [[Tu,Tv,Tw]] - T(D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v)
    """
    alg = rep.base
    if T.shape != (alg.dim, rep.vdim):
        raise ValueError(f"operator must have shape {(alg.dim, rep.vdim)}, got {T.shape}")
    B, Tr = alg.binary, alg.ternary
    rho, mu, D = rep.rho, rep.mu, derived_D(rep)
    o2 = (einsum("au,bv,abo->uvo", T, T, B)
          - einsum("oc,au,acv->uvo", T, T, rho)
          + einsum("oc,bv,bcu->uvo", T, T, rho))
    o1 = (einsum("au,bv,cw,abco->uvwo", T, T, T, Tr)
          - einsum("oe,au,bv,abew->uvwo", T, T, T, D)
          - einsum("oe,bv,cw,bceu->uvwo", T, T, T, mu)
          + einsum("oe,au,cw,acev->uvwo", T, T, T, mu))
    return o2, o1


def check_relative_rb(T: Tensor, rep: Representation) -> AxiomReport:
    o2, o1 = rb_residuals(T, rep)
    return AxiomReport("relative Rota-Baxter", [
        IdentityResult("binary", o2),
        IdentityResult("ternary", o1),
    ])


@dataclass(frozen=True)
class Agreement:
    """Two booleans that a theorem says must coincide."""

    first: bool
    second: bool
    labels: tuple[str, str] = ("first", "second")

    @property
    def agree(self) -> bool:
        return self.first == self.second

    def as_dict(self) -> dict:
        return {self.labels[0]: self.first, self.labels[1]: self.second, "agree": self.agree}


def cybe_rb_equivalence(r: TwoTensor) -> Agreement:
    """CYBE for skew r against r# being relative RB for the coadjoint representation."""
    if not r.is_skew():
        raise ValueError("the equivalence is stated for skew-symmetric r")
    return Agreement(bool(is_cybe_solution(r)),
                     bool(check_relative_rb(r_sharp(r), coadjoint_rep(r.alg))),
                     ("cybe", "rota_baxter"))


@dataclass(frozen=True)
class InducedCobracket:
    delta1: Tensor
    delta2: Tensor
    omega1: Tensor
    omega2: Tensor
    omega3: Tensor

    @property
    def delta(self) -> Tensor:
        return self.delta1 + self.delta2

    @property
    def omega(self) -> Tensor:
        return self.omega1 + self.omega2 + self.omega3


def induced_cobrackets(r: TwoTensor) -> InducedCobracket:
    """delta(x) = sum [x,x_i](x)y_i + x_i(x)[x,y_i] and the three-term omega, split.

    Arrays are indexed [x, slot1, slot2(, slot3)].
    """
    R, B, T = r.coeffs, r.alg.binary, r.alg.ternary
    d1 = einsum("ab,xbo->xao", R, B)                    # x_i (x) [x, y_i]
    d2 = einsum("ab,xao->xob", R, B)                    # [x, x_i] (x) y_i
    # i = (a,b), j = (c,d): x_i = e_a, y_i = R[a,b] e_b
    w1 = einsum("ab,cd,xaco->xodb", R, R, T)            # [[x,x_i,x_j]] (x) y_j (x) y_i
    w2 = einsum("ab,cd,axco->xdob", R, R, T)            # y_j (x) [[x_i,x,x_j]] (x) y_i
    w3 = einsum("ab,cd,acxo->xdbo", R, R, T)            # y_j (x) y_i (x) [[x_i,x_j,x]]
    return InducedCobracket(d1, d2, w1, w2, w3)


def induced_dual_brackets(r: TwoTensor, sharp: Tensor | None = None) -> LYAlgebra:
    """Brackets on g* from the coadjoint formulas with S = r#:

        [xi,eta]_* = ad*_{S xi} eta - ad*_{S eta} xi
        [[xi,eta,zeta]]_* = L*(S xi, S eta) zeta - R*(S zeta, S eta) xi + R*(S zeta, S xi) eta

    ``sharp`` overrides S (used to compare sign conventions).
    """
    if not r.is_skew():
        raise ValueError("induced dual brackets need a skew-symmetric r")
    S = r_sharp(r) if sharp is None else sharp
    co = coadjoint_rep(r.alg)
    rho, mu, L = co.rho, co.mu, derived_D(co)
    # coordinates: index i of g* is e_i^*; rho[x] acts on g* columns
    Bs = (einsum("ai,aoj->ijo", S, rho) - einsum("aj,aoi->ijo", S, rho))
    # -R*(z, y) = mu(y, z) for the coadjoint pair
    Ts = (einsum("ai,bj,abok->ijko", S, S, L)
          + einsum("bj,ck,bcoi->ijko", S, S, mu)
          - einsum("ai,ck,acoj->ijko", S, S, mu))
    return LYAlgebra(Bs, Ts, f"{r.alg.name or 'g'}*")


def _symplectic_form(r: TwoTensor) -> Tensor:
    # omega(x, y) = <(r#)^{-1} x, y>; column x of the inverse is (r#)^{-1}(e_x)
    inv = inverse(r_sharp(r))
    return inv.T                                        # W[x, y] = inv[y, x]


def symplectic_check(r: TwoTensor) -> AxiomReport:
    if not r.is_skew():
        raise ValueError("symplectic_check needs a skew-symmetric r")
    if not r.is_nondegenerate():
        raise ValueError("r# is singular")
    W = _symplectic_form(r)
    B, T = r.alg.binary, r.alg.ternary
    c1 = (einsum("xa,yza->xyz", W, B) + einsum("ya,zxa->xyz", W, B)
          + einsum("za,xya->xyz", W, B))
    c2 = (einsum("za,xywa->xyzw", W, T) - einsum("xa,wzya->xyzw", W, T)
          + einsum("ya,wzxa->xyzw", W, T) - einsum("wa,xyza->xyzw", W, T))
    return AxiomReport("symplectic", [
        IdentityResult("binary_closed", c1),
        IdentityResult("ternary_closed", c2),
    ])


def lift_rb_to_rmatrix(T: Tensor, rep: Representation) -> TwoTensor:
    """r = Tbar - sigma12(Tbar) on g + V* with Tbar = sum_i v_i^* (x) T(v_i).

    Basis order is g first, then V*.
    """
    alg = rep.base
    n, m = alg.dim, rep.vdim
    if T.shape != (n, m):
        raise ValueError(f"operator must have shape {(n, m)}, got {T.shape}")
    big = semidirect_product(alg, dual_rep(rep))
    Tbar = np.zeros((n + m, n + m), dtype=object)
    Tf = T.to_fractions()
    for i in range(m):
        for a in range(n):
            Tbar[n + i, a] = Tf[a, i]
    Tbar = Tensor(Tbar)
    return TwoTensor(big, Tbar - Tbar.T)


@dataclass(frozen=True)
class QuadraticLY:
    alg: LYAlgebra
    B: Tensor

    def __post_init__(self):
        n = self.alg.dim
        if self.B.shape != (n, n):
            raise ValueError(f"form must be {n} x {n}")
        if self.B != self.B.T:
            raise ValueError("bilinear form is not symmetric")
        if det(self.B) == 0:
            raise ValueError("bilinear form is degenerate")


def check_quadratic(q: QuadraticLY) -> AxiomReport:
    """B([x,y],z) + B(y,[x,z]) = 0 and B([[x,y,z]],w) - B(x,[[w,z,y]]) = 0."""
    Bin, T, F = q.alg.binary, q.alg.ternary, q.B
    i1 = einsum("xya,az->xyz", Bin, F) + einsum("ya,xza->xyz", F, Bin)
    i2 = einsum("xyza,aw->xyzw", T, F) - einsum("xa,wzya->xyzw", F, T)
    return AxiomReport("quadratic", [
        IdentityResult("binary_invariance", i1),
        IdentityResult("ternary_invariance", i2),
    ])


def b_natural(q: QuadraticLY) -> tuple[Tensor, AxiomReport]:
    """Matrix of B#: g -> g* with <B#(x), y> = B(x, y), plus the intertwiner report.

    B# ad_x = ad*_x B#, B# R(x,y) = -R*(y,x) B# and B# L(x,y) = L*(x,y) B#.
    """
    Bn = q.B.T                                          # column x is B#(e_x)
    ad, co = adjoint_rep(q.alg), coadjoint_rep(q.alg)
    lhs = einsum("pa,xaq->xpq", Bn, ad.rho)
    rhs = einsum("xpa,aq->xpq", co.rho, Bn)
    # -R*(y, x) = mu_co(x, y); the adjoint mu is R
    lhs2 = einsum("pa,xyaq->xypq", Bn, ad.mu)
    rhs2 = einsum("xypa,aq->xypq", co.mu, Bn)
    L, Ls = derived_D(ad), derived_D(co)
    lhs3 = einsum("pa,xyaq->xypq", Bn, L)
    rhs3 = einsum("xypa,aq->xypq", Ls, Bn)
    return Bn, AxiomReport("B-natural intertwiners", [
        IdentityResult("ad", lhs - rhs),
        IdentityResult("R", lhs2 - rhs2),
        IdentityResult("L", lhs3 - rhs3, consequence=True),
    ])


def sts_transfer(q: QuadraticLY, T: Tensor) -> Agreement:
    """T relative RB for the coadjoint rep iff T B# is relative RB for the adjoint rep."""
    Bn, _ = b_natural(q)
    co = bool(check_relative_rb(T, coadjoint_rep(q.alg)))
    ad = bool(check_relative_rb(einsum("ia,aj->ij", T, Bn), adjoint_rep(q.alg)))
    return Agreement(co, ad, ("coadjoint", "adjoint"))
