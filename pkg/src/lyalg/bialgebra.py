"""Cobrackets, matched pairs, Manin triples and Lie-Yamaguti bialgebras.

A cobracket on g is stored like the brackets, with the argument first:
``delta[i, j, k]`` is the e_j (x) e_k coefficient of delta(e_i) and
``omega[i, j, k, l]`` the e_j (x) e_k (x) e_l coefficient of omega(e_i).
Dualizing gives [e_j^*, e_k^*]_* = sum_i delta[i, j, k] e_i^*, and likewise
for omega, so the dual constants are a transposition of the cobracket.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .algebra import LYAlgebra, ly_axiom_report
from .checks import AxiomReport, IdentityResult
from .cohomology import Cochain, coboundary
from .linalg import Tensor, as_fraction, einsum, identity, inverse, permute, rank, stack, zeros
from .representation import (Representation, adjoint_rep, check_representation, derived_D,
                             dual_rep)
from .yang_baxter import QuadraticLY, check_quadratic

__all__ = [
    "Cobracket",
    "dual_structure",
    "slot_representation",
    "check_local_cocycle",
    "double_construction_residuals",
    "check_double_construction",
    "MatchedPairData",
    "bowtie_product",
    "check_matched_pair",
    "MatchedPairReport",
    "coadjoint_matched_pair",
    "ManinTriple",
    "standard_manin_triple",
    "check_manin_triple",
    "EquivalenceReport",
    "equivalence_report",
    "local_from_double",
    "enumerate_double_constructions",
    "canonical_pairing_form",
    "SIGMA_ORDERS",
    "SPLIT_NAMES",
]

SPLIT_NAMES = ("delta1", "delta2", "omega1", "omega2", "omega3")


@dataclass(frozen=True)
class Cobracket:
    alg: LYAlgebra
    delta: Tensor
    omega: Tensor
    splits: dict | None = None
    name: str = ""

    def __post_init__(self):
        n = self.alg.dim
        if self.delta.shape != (n,) * 3:
            raise ValueError(f"delta must have shape {(n,) * 3}, got {self.delta.shape}")
        if self.omega.shape != (n,) * 4:
            raise ValueError(f"omega must have shape {(n,) * 4}, got {self.omega.shape}")
        if self.splits is not None:
            missing = [k for k in SPLIT_NAMES if k not in self.splits]
            if missing:
                raise ValueError(f"splits are missing {missing}")
            s = self.splits
            if s["delta1"] + s["delta2"] != self.delta:
                raise ValueError("delta1 + delta2 does not equal delta")
            if s["omega1"] + s["omega2"] + s["omega3"] != self.omega:
                raise ValueError("omega1 + omega2 + omega3 does not equal omega")

    @property
    def dim(self) -> int:
        return self.alg.dim

    @classmethod
    def zero(cls, alg: LYAlgebra) -> "Cobracket":
        n = alg.dim
        return cls(alg, zeros((n,) * 3), zeros((n,) * 4), name="trivial")

    def with_splits(self, **parts: Tensor) -> "Cobracket":
        return Cobracket(self.alg, self.delta, self.omega, dict(parts), self.name)

    def is_zero(self) -> bool:
        return self.delta.is_zero() and self.omega.is_zero()


# --------------------------------------------------------------------------
# dual side


def _dual_constants(c: Cobracket) -> tuple[Tensor, Tensor]:
    return permute(c.delta, (1, 2, 0)), permute(c.omega, (1, 2, 3, 0))


def dual_structure(c: Cobracket) -> tuple[LYAlgebra | None, AxiomReport]:
    """Candidate brackets on g* and the coalgebra report.

    The report holds the two skew conditions followed by the four LY
    identities.  The algebra is None when skewness fails.
    """
    Bs, Ts = _dual_constants(c)
    skew_b = Bs + permute(Bs, (1, 0, 2))
    skew_t = Ts + permute(Ts, (1, 0, 2, 3))
    report = ly_axiom_report(Bs, Ts, f"{c.alg.name or 'g'}*")
    report.identities[:0] = [IdentityResult("binary_skew", skew_b),
                             IdentityResult("ternary_skew", skew_t)]
    if not (skew_b.is_zero() and skew_t.is_zero()):
        return None, report
    return LYAlgebra(Bs, Ts, f"{c.alg.name or 'g'}*"), report


def _slot_lift(op: Tensor, order: int, slot: int, n: int) -> Tensor:
    """Act by ``op[..., p, q]`` in one tensor slot, identity in the others."""
    lead = op.ndim - 2
    letters = "abcdefgh"[:lead]
    out_rows = "pqr"[:order]
    in_cols = "stu"[:order]
    ops = [op]
    specs = [letters + out_rows[slot] + in_cols[slot]]
    for k in range(order):
        if k != slot:
            ops.append(identity(n))
            specs.append(out_rows[k] + in_cols[k])
    full = einsum(",".join(specs) + "->" + letters + out_rows + in_cols, *ops)
    return full.reshape(op.shape[:lead] + (n ** order, n ** order))


def slot_representation(alg: LYAlgebra, order: int, slot: int) -> Representation:
    """(g^{(x) order}; ad, R) acting in the 1-based ``slot``, identity elsewhere."""
    if order not in (2, 3):
        raise ValueError("order must be 2 or 3")
    if not 1 <= slot <= order:
        raise ValueError(f"slot must lie in 1..{order}, got {slot}")
    ad = adjoint_rep(alg)
    n = alg.dim
    return Representation(alg, _slot_lift(ad.rho, order, slot - 1, n),
                          _slot_lift(ad.mu, order, slot - 1, n))


# delta1 lives on (1 (x) ad), delta2 on (ad (x) 1), omega_j in slot j
_LOCAL_SLOTS = {"delta1": (2, 2), "delta2": (2, 1),
                "omega1": (3, 1), "omega2": (3, 2), "omega3": (3, 3)}


def _as_map(t: Tensor) -> Tensor:
    """Cobracket array -> matrix whose column i is the flattened image of e_i."""
    order = t.ndim - 1
    n = t.shape[0]
    return permute(t, tuple(range(1, order + 1)) + (0,)).reshape((n ** order, n))


def check_local_cocycle(c: Cobracket) -> AxiomReport:
    if c.splits is None:
        raise ValueError("local cocycle check needs the split components")
    _, coalg = dual_structure(c)
    ids = [IdentityResult(f"coalgebra:{r.name}", r.residual, r.consequence)
           for r in coalg.identities]
    for key, (order, slot) in _LOCAL_SLOTS.items():
        rep = slot_representation(c.alg, order, slot)
        rep_report = check_representation(rep)
        for r in rep_report.identities:
            ids.append(IdentityResult(f"{key}:rep:{r.name}", r.residual, True))
        d = coboundary(Cochain(1, _as_map(c.splits[key])), rep)
        ids.append(IdentityResult(f"{key}:cocycle_binary", d.f))
        ids.append(IdentityResult(f"{key}:cocycle_ternary", d.g))
    return AxiomReport("local cocycle bialgebra", ids)


def local_from_double(c: Cobracket, k1, k2, k3) -> Cobracket:
    """delta_i = delta/2 and omega_j = k_j omega, with k1 = k2 and k1 + k2 + k3 = 1."""
    k1, k2, k3 = as_fraction(k1), as_fraction(k2), as_fraction(k3)
    if k1 != k2 or k1 + k2 + k3 != 1:
        raise ValueError(f"need k1 = k2 and k1 + k2 + k3 = 1, got ({k1}, {k2}, {k3})")
    half = Fraction(1, 2)
    return c.with_splits(delta1=c.delta * half, delta2=c.delta - c.delta * half,
                         omega1=c.omega * k1, omega2=c.omega * k2,
                         omega3=c.omega - c.omega * k1 - c.omega * k2)


# --------------------------------------------------------------------------
# double construction


# sigma12 sigma23 applied to a (x) b (x) c, as an axis permutation
SIGMA_ORDERS = {"right_first": (2, 0, 1), "left_first": (1, 2, 0)}


def double_construction_residuals(alg: LYAlgebra, delta: Tensor, omega: Tensor,
                                  sigma_order: str = "left_first") -> list[IdentityResult]:
    """The seven compatibility conditions between the brackets and (delta, omega).

    Indexing: arguments first, then the tensor slots of the output.
    """
    ad = adjoint_rep(alg)
    rho, R, L = ad.rho, ad.mu, derived_D(ad)
    B, T = alg.binary, alg.ternary
    d, w = delta, omega

    # delta([x,y]) = (ad_x (x) 1 + 1 (x) ad_x) delta(y) - (x <-> y)
    r1 = (einsum("xya,apq->xypq", B, d)
          - einsum("xpa,yaq->xypq", rho, d) - einsum("xqa,ypa->xypq", rho, d)
          + einsum("ypa,xaq->xypq", rho, d) + einsum("yqa,xpa->xypq", rho, d))
    # (1 (x) R(y,z)) delta(x) = (1 (x) R(x,z)) delta(y)
    r2 = einsum("yzqa,xpa->xyzpq", R, d) - einsum("xzqa,ypa->xyzpq", R, d)
    # omega([x,y]) = (1 (x) 1 (x) ad_x) omega(y) - (1 (x) 1 (x) ad_y) omega(x)
    r3 = (einsum("xya,apqr->xypqr", B, w)
          - einsum("xra,ypqa->xypqr", rho, w) + einsum("yra,xpqa->xypqr", rho, w))
    # delta([[x,y,z]]) = (L(x,y) (x) 1 + 1 (x) L(x,y)) delta(z)
    r4 = (einsum("xyza,apq->xyzpq", T, d)
          - einsum("xypa,zaq->xyzpq", L, d) - einsum("xyqa,zpa->xyzpq", L, d))
    # (R(y,z) (x) 1) delta(x) = (R(x,z) (x) 1) delta(y)
    r5 = einsum("yzpa,xaq->xyzpq", R, d) - einsum("xzpa,yaq->xyzpq", R, d)
    # omega([[x,y,z]]) = L(x,y) acting on each slot of omega(z)
    r6 = (einsum("xyza,apqr->xyzpqr", T, w)
          - einsum("xypa,zaqr->xyzpqr", L, w) - einsum("xyqa,zpar->xyzpqr", L, w)
          - einsum("xyra,zpqa->xyzpqr", L, w))
    # (1 (x) R(y,x) (x) 1 - R(x,y) (x) 1 (x) 1) omega(z)
    #   = s12 s23 (1 (x) R(x,z) (x) 1) omega(y) + s23 (1 (x) R(y,z) (x) 1) omega(x)
    perm = SIGMA_ORDERS[sigma_order]
    lhs = einsum("yxqa,zpar->xyzpqr", R, w) - einsum("xypa,zaqr->xyzpqr", R, w)
    a = einsum("xzqa,ypar->xyzpqr", R, w)
    b = einsum("yzqa,xpar->xyzpqr", R, w)
    r7 = lhs - permute(a, (0, 1, 2) + tuple(3 + k for k in perm)) - permute(b, (0, 1, 2, 3, 5, 4))
    return [IdentityResult("delta_bracket", r1),
            IdentityResult("delta_R_right", r2),
            IdentityResult("omega_bracket", r3),
            IdentityResult("delta_triple", r4),
            IdentityResult("delta_R_left", r5),
            IdentityResult("omega_triple", r6),
            IdentityResult("omega_R_exchange", r7)]


def check_double_construction(c: Cobracket, sigma_order: str = "left_first") -> AxiomReport:
    _, coalg = dual_structure(c)
    ids = [IdentityResult(f"coalgebra:{r.name}", r.residual) for r in coalg.identities]
    ids += double_construction_residuals(c.alg, c.delta, c.omega, sigma_order)
    return AxiomReport("double construction bialgebra", ids)


# --------------------------------------------------------------------------
# matched pairs


@dataclass(frozen=True)
class MatchedPairData:
    """g1 acts on g2 by (rho1, mu1); g2 acts on g1 by (rho2, mu2)."""

    g1: LYAlgebra
    g2: LYAlgebra
    rho1: Tensor
    mu1: Tensor
    rho2: Tensor
    mu2: Tensor

    def __post_init__(self):
        n1, n2 = self.g1.dim, self.g2.dim
        want = {"rho1": (n1, n2, n2), "mu1": (n1, n1, n2, n2),
                "rho2": (n2, n1, n1), "mu2": (n2, n2, n1, n1)}
        for k, shape in want.items():
            if getattr(self, k).shape != shape:
                raise ValueError(f"{k} must have shape {shape}, got {getattr(self, k).shape}")

    @property
    def rep1(self) -> Representation:
        return Representation(self.g1, self.rho1, self.mu1)

    @property
    def rep2(self) -> Representation:
        return Representation(self.g2, self.rho2, self.mu2)

    def swapped(self) -> "MatchedPairData":
        return MatchedPairData(self.g2, self.g1, self.rho2, self.mu2, self.rho1, self.mu1)


def bowtie_product(mp: MatchedPairData, name: str = "") -> LYAlgebra:
    """Brackets on g1 + g2 (g1 first).  Not necessarily an LY algebra."""
    g1, g2 = mp.g1, mp.g2
    n1, n2 = g1.dim, g2.dim
    N = n1 + n2
    B = np.zeros((N,) * 3, dtype=object)
    T = np.zeros((N,) * 4, dtype=object)
    B[:n1, :n1, :n1] = g1.binary.to_fractions()
    B[n1:, n1:, n1:] = g2.binary.to_fractions()
    T[:n1, :n1, :n1, :n1] = g1.ternary.to_fractions()
    T[n1:, n1:, n1:, n1:] = g2.ternary.to_fractions()
    r1, m1 = mp.rho1.to_fractions(), mp.mu1.to_fractions()
    r2, m2 = mp.rho2.to_fractions(), mp.mu2.to_fractions()
    D1, D2 = derived_D(mp.rep1).to_fractions(), derived_D(mp.rep2).to_fractions()
    for x in range(n1):
        B[x, n1:, n1:] = r1[x].T            # [x, v] = rho1(x) v
        B[n1:, x, n1:] = -r1[x].T
        for y in range(n1):
            T[x, y, n1:, n1:] = D1[x, y].T   # [[x, y, w]] = D1(x, y) w
            T[n1:, x, y, n1:] = m1[x, y].T   # [[u, y, z]] = mu1(y, z) u
            T[x, n1:, y, n1:] = -m1[x, y].T
    for u in range(n2):
        B[n1 + u, :n1, :n1] = r2[u].T
        B[:n1, n1 + u, :n1] = -r2[u].T
        for v in range(n2):
            T[n1 + u, n1 + v, :n1, :n1] = D2[u, v].T
            T[:n1, n1 + u, n1 + v, :n1] = m2[u, v].T
            T[n1 + u, :n1, n1 + v, :n1] = -m2[u, v].T
    return LYAlgebra(Tensor(B), Tensor(T), name or f"{g1.name or 'g1'}|><|{g2.name or 'g2'}")


def _one_sided(g1: LYAlgebra, r1, m1, D1, r2, m2, D2) -> list[tuple[str, Tensor]]:
    """Nine identities in which g2 acts on g1; the outputs all lie in g1.

    x, y, z are in g1 and u, v in g2; ``o`` is the output coordinate.
    """
    B1, T1 = g1.binary, g1.ternary
    return [
        # [r2(u)x,y] - r2(r1(x)u)y - r2(u)[x,y] - [r2(u)y,x] + r2(r1(y)u)x = 0
        ("rho_bracket",
         einsum("uax,ayo->uxyo", r2, B1) - einsum("xbu,boy->uxyo", r1, r2)
         - einsum("xya,uoa->uxyo", B1, r2) - einsum("uay,axo->uxyo", r2, B1)
         + einsum("ybu,box->uxyo", r1, r2)),
        # [[r2(u)x,y,z]] = [[r2(u)y,x,z]]
        ("rho_triple_swap",
         einsum("uax,ayzo->uxyzo", r2, T1) - einsum("uay,axzo->uxyzo", r2, T1)),
        # m2(u,v)[x,y] - m2(r1(y)u,v)x + m2(r1(x)u,v)y = 0
        ("mu_bracket",
         einsum("xya,uvoa->uvxyo", B1, m2) - einsum("ybu,bvox->uvxyo", r1, m2)
         + einsum("xbu,bvoy->uvxyo", r1, m2)),
        # [[x,y,r2(u)z]] = r2(D1(x,y)u)z + r2(u)[[x,y,z]]
        ("triple_rho_derivation",
         einsum("uaz,xyao->uxyzo", r2, T1) - einsum("xybu,boz->uxyzo", D1, r2)
         - einsum("xyza,uoa->uxyzo", T1, r2)),
        # m2(u,r1(x)v)y = [x,m2(u,v)y]
        ("mu_rho",
         einsum("xbv,uboy->uvxyo", r1, m2) - einsum("uvay,xao->uvxyo", m2, B1)),
        # r2(m1(x,y)u)z = r2(m1(x,z)u)y
        ("rho_mu_swap",
         einsum("xybu,boz->uxyzo", m1, r2) - einsum("xzbu,boy->uxyzo", m1, r2)),
        # [[x,y,m2(u,v)z]] = m2(u,v)[[x,y,z]] + m2(D1(x,y)u,v)z + m2(u,D1(x,y)v)z
        ("triple_mu_derivation",
         einsum("uvaz,xyao->uvxyzo", m2, T1) - einsum("xyza,uvoa->uvxyzo", T1, m2)
         - einsum("xybu,bvoz->uvxyzo", D1, m2) - einsum("xybv,uboz->uvxyzo", D1, m2)),
        # m2(u,m1(x,y)v)z = [[m2(u,v)z,x,y]] - D2(v,m1(z,x)u)y + m2(v,m1(z,y)u)x
        ("mu_mu_expansion",
         einsum("xybv,uboz->uvxyzo", m1, m2) - einsum("uvaz,axyo->uvxyzo", m2, T1)
         + einsum("zxbu,vboy->uvxyzo", m1, D2) - einsum("zybu,vbox->uvxyzo", m1, m2)),
        # m2(u,m1(x,y)v)z = D2(m1(z,x)u,v)y - [[x,m2(u,v)z,y]] + m2(v,m1(z,y)u)x
        ("mu_mu_expansion_alt",
         einsum("xybv,uboz->uvxyzo", m1, m2) - einsum("zxbu,bvoy->uvxyzo", m1, D2)
         + einsum("uvaz,xayo->uvxyzo", m2, T1) - einsum("zybu,vbox->uvxyzo", m1, m2)),
    ]


def _corollary(g1: LYAlgebra, r1, D2) -> list[tuple[str, Tensor]]:
    """D2 identities that follow from the matched-pair conditions."""
    B1, T1 = g1.binary, g1.ternary
    return [
        # D2(r1(x)u, v) = D2(r1(x)v, u)
        ("D_rho_swap",
         einsum("xbu,bvpq->xuvpq", r1, D2) - einsum("xbv,bupq->xuvpq", r1, D2)),
        # D2(u,v)[x,y] = [D2(u,v)x,y] + [x,D2(u,v)y]
        ("D_bracket_derivation",
         einsum("xya,uvoa->uvxyo", B1, D2) - einsum("uvax,ayo->uvxyo", D2, B1)
         - einsum("uvay,xao->uvxyo", D2, B1)),
        # D2(u,v)[[x,y,z]] is a derivation of the triple
        ("D_triple_derivation",
         einsum("xyza,uvoa->uvxyzo", T1, D2) - einsum("uvax,ayzo->uvxyzo", D2, T1)
         - einsum("uvay,xazo->uvxyzo", D2, T1) - einsum("uvaz,xyao->uvxyzo", D2, T1)),
    ]


@dataclass
class MatchedPairReport:
    identities: AxiomReport
    bowtie: AxiomReport

    @property
    def passed(self) -> bool:
        return self.identities.passed

    @property
    def agree(self) -> bool:
        """The identity list holds exactly when the bowtie brackets are LY."""
        return self.identities.passed == self.bowtie.passed

    def __bool__(self) -> bool:
        return self.passed


def check_matched_pair(mp: MatchedPairData) -> MatchedPairReport:
    ids: list[IdentityResult] = []
    for tag, rep in (("rep1", mp.rep1), ("rep2", mp.rep2)):
        for r in check_representation(rep).identities:
            ids.append(IdentityResult(f"{tag}:{r.name}", r.residual, r.consequence))
    sides = ((mp, "g1"), (mp.swapped(), "g2"))
    for data, tag in sides:
        D1, D2 = derived_D(data.rep1), derived_D(data.rep2)
        for name, res in _one_sided(data.g1, data.rho1, data.mu1, D1,
                                    data.rho2, data.mu2, D2):
            ids.append(IdentityResult(f"{tag}:{name}", res))
    for data, tag in sides:
        D2 = derived_D(data.rep2)
        for name, res in _corollary(data.g1, data.rho1, D2):
            ids.append(IdentityResult(f"{tag}:{name}", res, consequence=True))
    bow = ly_axiom_report(*_bowtie_constants(mp), "bowtie")
    return MatchedPairReport(AxiomReport("matched pair", ids), bow)


def _bowtie_constants(mp: MatchedPairData) -> tuple[Tensor, Tensor]:
    G = bowtie_product(mp)
    return G.binary, G.ternary


def coadjoint_matched_pair(c: Cobracket) -> MatchedPairData:
    """(g, g*; ad*, -R*tau, ad*, -R*tau) for a cobracket with skew dual brackets."""
    gs, report = dual_structure(c)
    if gs is None:
        raise ValueError(f"dual brackets are not skew: {report.failures()}")
    co1 = dual_rep(adjoint_rep(c.alg))
    co2 = dual_rep(adjoint_rep(gs))
    return MatchedPairData(c.alg, gs, co1.rho, co1.mu, co2.rho, co2.mu)


# --------------------------------------------------------------------------
# Manin triples


def canonical_pairing_form(n: int) -> Tensor:
    """B(x + xi, y + eta) = <x, eta> + <xi, y> on g + g*."""
    F = np.zeros((2 * n, 2 * n), dtype=object)
    for i in range(n):
        F[i, n + i] = 1
        F[n + i, i] = 1
    return Tensor(F)


@dataclass(frozen=True)
class ManinTriple:
    algebra: LYAlgebra
    form: Tensor
    first: tuple
    second: tuple

    @property
    def quadratic(self) -> QuadraticLY:
        return QuadraticLY(self.algebra, self.form)


def _basis_vectors(N: int, idx: Sequence[int]) -> tuple:
    out = []
    for i in idx:
        v = np.zeros(N, dtype=object)
        v[i] = 1
        out.append(Tensor(v))
    return tuple(out)


def standard_manin_triple(c: Cobracket) -> ManinTriple:
    mp = coadjoint_matched_pair(c)
    n = c.dim
    G = bowtie_product(mp, f"{c.alg.name or 'g'}+g*")
    return ManinTriple(G, canonical_pairing_form(n),
                       _basis_vectors(2 * n, range(n)), _basis_vectors(2 * n, range(n, 2 * n)))


def _columns(vectors: Sequence[Tensor]) -> Tensor:
    return stack(list(vectors)).T


def check_manin_triple(algebra: LYAlgebra, form: Tensor,
                       first: Sequence[Tensor], second: Sequence[Tensor]) -> AxiomReport:
    """Direct sum, isotropy, closure and the four projection conditions."""
    N = algebra.dim
    P1, P2 = _columns(first), _columns(second)
    k1, k2 = P1.shape[1], P2.shape[1]
    P = _columns(list(first) + list(second))
    if k1 + k2 != N or rank(P) != N:
        raise ValueError("the two subspaces are not complementary")
    Q = inverse(P)
    Bn, Tn = algebra.binary, algebra.ternary
    # coordinates of brackets of basis vectors in the adapted basis
    Bc = einsum("ai,bj,abc,kc->ijk", P, P, Bn, Q)
    Tc = einsum("ai,bj,ck,abcd,ld->ijkl", P, P, P, Tn, Q)
    s1, s2 = slice(0, k1), slice(k1, N)

    ids = [IdentityResult("invariant_form:" + r.name, r.residual)
           for r in check_quadratic(QuadraticLY(algebra, form)).identities]
    ids += [IdentityResult("ly:" + r.name, r.residual)
            for r in ly_axiom_report(Bn, Tn).identities]
    ids += [
        IdentityResult("isotropic_first", einsum("ai,ab,bj->ij", P1, form, P1)),
        IdentityResult("isotropic_second", einsum("ai,ab,bj->ij", P2, form, P2)),
        IdentityResult("closed_first", Tensor(np.concatenate([
            Bc.to_fractions()[s1, s1, s2].ravel(),
            Tc.to_fractions()[s1, s1, s1, s2].ravel()]).astype(object))),
        IdentityResult("closed_second", Tensor(np.concatenate([
            Bc.to_fractions()[s2, s2, s1].ravel(),
            Tc.to_fractions()[s2, s2, s2, s1].ravel()]).astype(object))),
    ]
    Tf = Tc.to_fractions()
    ids += [
        IdentityResult("pr1_x1_y1_x2", Tensor(Tf[s1, s1, s2, s1].copy())),
        IdentityResult("pr1_x1_x2_y1", Tensor(Tf[s1, s2, s1, s1].copy())),
        IdentityResult("pr2_x2_y2_x1", Tensor(Tf[s2, s2, s1, s2].copy())),
        IdentityResult("pr2_x2_x1_y2", Tensor(Tf[s2, s1, s2, s2].copy())),
    ]
    return AxiomReport("Manin triple", ids)


# --------------------------------------------------------------------------
# main equivalence


@dataclass
class EquivalenceReport:
    double_construction: AxiomReport
    matched_pair: MatchedPairReport
    manin: AxiomReport

    @property
    def verdicts(self) -> dict:
        return {"double_construction": self.double_construction.passed,
                "matched_pair": self.matched_pair.passed,
                "manin_triple": self.manin.passed}

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts.values())) == 1 and self.matched_pair.agree

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def __bool__(self) -> bool:
        return self.passed


def equivalence_report(c: Cobracket, sigma_order: str = "left_first") -> EquivalenceReport:
    gs, coalg = dual_structure(c)
    if gs is None:
        raise ValueError(f"dual brackets are not skew: {coalg.failures()}")
    mp = coadjoint_matched_pair(c)
    mt = standard_manin_triple(c)
    return EquivalenceReport(check_double_construction(c, sigma_order),
                             check_matched_pair(mp),
                             check_manin_triple(mt.algebra, mt.form, mt.first, mt.second))


# --------------------------------------------------------------------------
# grid enumeration


def _skew_coordinates(n: int, order: int) -> list[tuple]:
    """Index tuples (i, j < k, rest...) parametrizing cobrackets skew in slots 1, 2."""
    pairs = list(itertools.combinations(range(n), 2))
    rest = list(itertools.product(range(n), repeat=order - 2))
    return [(i, j, k) + r for i in range(n) for (j, k) in pairs for r in rest]


def _cobracket_tensor(n: int, order: int, coords, values) -> Tensor:
    arr = np.zeros((n,) * (order + 1), dtype=object)
    for (i, j, k, *r), v in zip(coords, values):
        arr[(i, j, k, *r)] = v
        arr[(i, k, j, *r)] = -v
    return Tensor(arr)


def _integer_columns(columns: list[list[Tensor]]) -> np.ndarray:
    """Integer matrix whose k-th column is the flattened residual list ``columns[k]``."""
    den = 1
    for parts in columns:
        for t in parts:
            den = den * t.den // math.gcd(den, t.den)
    cols = [np.concatenate([np.asarray(t.num, dtype=np.int64).ravel() * (den // t.den)
                            for t in parts]) for parts in columns]
    return np.stack(cols, axis=1)


def _kernel_rows(grid: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Mask of grid vectors v with M v = 0.

    The product runs in float64 for speed; it is exact while every partial sum
    stays below 2**53, which the bound below guarantees.
    """
    M = np.unique(M[np.any(M, axis=1)], axis=0)
    bound = int(np.abs(grid).sum(axis=1).max(initial=0)) * int(np.abs(M).max(initial=0))
    if bound >= 2 ** 53:
        return ~np.any(grid @ M.T, axis=1)
    return ~np.any(grid.astype(np.float64) @ M.T.astype(np.float64), axis=1)


def _sparse_grid(size: int, values, support: int) -> np.ndarray:
    nz = [v for v in values if v != 0]
    out = [np.zeros(size, dtype=np.int64)]
    for s in range(1, support + 1):
        for pos in itertools.combinations(range(size), s):
            for vals in itertools.product(nz, repeat=s):
                v = np.zeros(size, dtype=np.int64)
                v[list(pos)] = vals
                out.append(v)
    return np.stack(out)


def enumerate_double_constructions(alg: LYAlgebra, values=(-1, 0, 1), max_support: int = 2,
                                   sigma_order: str = "left_first") -> Iterator[Cobracket]:
    """Every grid cobracket (skew in its first two slots) passing check_double_construction.

    The seven compatibility conditions each involve only delta or only omega
    and are linear, so both grids are screened with one integer product each
    before the coupled coalgebra check.
    """
    n = alg.dim
    dc, wc = _skew_coordinates(n, 2), _skew_coordinates(n, 3)
    zd, zw = zeros((n,) * 3), zeros((n,) * 4)

    def d_res(d):
        return [r.residual for r in double_construction_residuals(alg, d, zw, sigma_order)
                if r.name.startswith("delta")]

    def w_res(w):
        return [r.residual for r in double_construction_residuals(alg, zd, w, sigma_order)
                if not r.name.startswith("delta")]

    def basis_matrix(coords, order, res):
        return _integer_columns([res(Tensor._raw(_int_cobracket(n, order, [c], [1]), 1))
                                 for c in coords])

    Md, Mw = basis_matrix(dc, 2, d_res), basis_matrix(wc, 3, w_res)
    dgrid, wgrid = _sparse_grid(len(dc), values, max_support), _sparse_grid(len(wc), values, max_support)
    dkeep = dgrid[_kernel_rows(dgrid, Md)]
    wkeep = wgrid[_kernel_rows(wgrid, Mw)]
    # integer arithmetic is exact here.  For fixed delta three of the four
    # coalgebra identities are affine in omega; the fundamental identity is
    # quadratic and is evaluated per candidate.
    wtensors = np.stack([_int_cobracket(n, 3, wc, wv) for wv in wkeep]) if len(wkeep) else None
    for dv in dkeep:
        d = _int_cobracket(n, 2, dc, dv)
        Bs = d.transpose(1, 2, 0)
        if wtensors is None:
            break
        Ts = wtensors.transpose(0, 2, 3, 4, 1)
        ok = np.ones(len(wkeep), dtype=bool)
        for res in _int_affine_ly(Bs, Ts):
            ok &= ~np.any(res.reshape(len(wkeep), -1), axis=1)
        for k in np.flatnonzero(ok):
            if not np.any(_int_fundamental(Ts[k])):
                yield Cobracket(alg, Tensor._raw(d, 1), Tensor._raw(wtensors[k].copy(), 1))


def _int_cobracket(n: int, order: int, coords, values) -> np.ndarray:
    arr = np.zeros((n,) * (order + 1), dtype=np.int64)
    for (i, j, k, *r), v in zip(coords, values):
        arr[(i, j, k, *r)] = v
        arr[(i, k, j, *r)] = -v
    return arr


def _int_cyclic(t: np.ndarray, lead: int) -> np.ndarray:
    """Cyclic sum over axes lead, lead+1, lead+2."""
    axes = list(range(t.ndim))
    a, b, c = lead, lead + 1, lead + 2

    def perm(p):
        out = axes.copy()
        out[a], out[b], out[c] = p
        return t.transpose(out)
    return t + perm((b, c, a)) + perm((c, a, b))


def _int_affine_ly(B: np.ndarray, T: np.ndarray):
    """mixed Jacobi, cyclic and derivation residuals for a batch T[k, ...]."""
    BB = np.einsum("xya,azo->xyzo", B, B)
    yield _int_cyclic(np.broadcast_to(BB, T.shape), 1) + _int_cyclic(T, 1)
    yield _int_cyclic(np.einsum("xya,kazwo->kxyzwo", B, T), 1)
    yield (np.einsum("kxyao,zwa->kxyzwo", T, B) - np.einsum("kxyza,awo->kxyzwo", T, B)
           - np.einsum("kxywa,zao->kxyzwo", T, B))


def _int_fundamental(T: np.ndarray) -> np.ndarray:
    return (np.einsum("zwta,xyao->xyzwto", T, T) - np.einsum("xyza,awto->xyzwto", T, T)
            - np.einsum("xywa,zato->xyzwto", T, T) - np.einsum("xyta,zwao->xyzwto", T, T))
