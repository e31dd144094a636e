"""Yamaguti cochain complex with coefficients in a representation.

A 1-cochain is an m x n matrix whose column i is f(e_i).  A cochain of
degree p = n+1 >= 2 is a pair (f, g):

    f[a1, b1, ..., an, bn, o]       f(X_1, ..., X_n)          with X_k = a_k ^ b_k
    g[a1, b1, ..., an, bn, z, o]    g(X_1, ..., X_n, z)

Every (a_k, b_k) slot pair is skew.  The output coordinate is always last.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .algebra import LYAlgebra
from .linalg import Tensor, einsum, permute, zeros
from .representation import Representation, derived_D

__all__ = [
    "Cochain",
    "coboundary",
    "is_one_cocycle",
    "is_derivation",
    "coboundary_squared",
]


def _pair_skew(t: Tensor, pairs: int) -> bool:
    for k in range(pairs):
        perm = list(range(t.ndim))
        perm[2 * k], perm[2 * k + 1] = perm[2 * k + 1], perm[2 * k]
        if t != -permute(t, perm):
            return False
    return True


@dataclass(frozen=True)
class Cochain:
    """A p-cochain; ``f`` alone for p = 1, the pair (f, g) otherwise."""

    degree: int
    f: Tensor
    g: Tensor | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("cochain degree must be at least 1")
        if self.degree == 1:
            if self.f.ndim != 2 or self.g is not None:
                raise ValueError("a 1-cochain is a single m x n matrix")
            return
        n = self.degree - 1
        if self.g is None:
            raise ValueError(f"a {self.degree}-cochain needs both f and g")
        if self.f.ndim != 2 * n + 1 or self.g.ndim != 2 * n + 2:
            raise ValueError(f"bad array ranks {self.f.ndim}, {self.g.ndim} for degree {self.degree}")
        dim, m = self.f.shape[0], self.f.shape[-1]
        if self.f.shape != (dim,) * (2 * n) + (m,) or self.g.shape != (dim,) * (2 * n + 1) + (m,):
            raise ValueError("inconsistent cochain shapes")
        if not (_pair_skew(self.f, n) and _pair_skew(self.g, n)):
            raise ValueError("cochain is not skew in each wedge slot")

    @property
    def vdim(self) -> int:
        return self.f.shape[0] if self.degree == 1 else self.f.shape[-1]

    @property
    def dim(self) -> int:
        return self.f.shape[1] if self.degree == 1 else self.f.shape[0]

    def is_zero(self) -> bool:
        return self.f.is_zero() and (self.g is None or self.g.is_zero())

    @classmethod
    def zero(cls, degree: int, dim: int, vdim: int) -> "Cochain":
        if degree == 1:
            return cls(1, zeros((vdim, dim)))
        n = degree - 1
        return cls(degree, zeros((dim,) * (2 * n) + (vdim,)),
                   zeros((dim,) * (2 * n + 1) + (vdim,)))


def _check_shapes(c: Cochain, rep: Representation) -> None:
    if c.dim != rep.base.dim or c.vdim != rep.vdim:
        raise ValueError(f"cochain over ({c.dim}, {c.vdim}) does not match "
                         f"representation over ({rep.base.dim}, {rep.vdim})")


def _degree_one(f: Tensor, rep: Representation) -> Cochain:
    rho, mu, D = rep.rho, rep.mu, derived_D(rep)
    B, T = rep.base.binary, rep.base.ternary
    dI = (einsum("xoq,qy->xyo", rho, f) - einsum("yoq,qx->xyo", rho, f)
          - einsum("xya,oa->xyo", B, f))
    dII = (einsum("xyoq,qz->xyzo", D, f) + einsum("yzoq,qx->xyzo", mu, f)
           - einsum("xzoq,qy->xyzo", mu, f) - einsum("xyza,oa->xyzo", T, f))
    return Cochain(2, dI, dII)


class _Letters:
    """Hands out fresh einsum subscripts."""

    def __init__(self, reserved: str = ""):
        self._pool = iter(c for c in string.ascii_letters if c not in reserved)

    def __call__(self) -> str:
        return next(self._pool)


def _higher(c: Cochain, rep: Representation) -> Cochain:
    n = c.degree - 1
    f, g = c.f, c.g
    rho, mu, D = rep.rho, rep.mu, derived_D(rep)
    B, T = rep.base.binary, rep.base.ternary
    sign_n = -1 if n % 2 else 1

    new = _Letters()
    xs = [new() for _ in range(n + 1)]
    ys = [new() for _ in range(n + 1)]
    z, o, q, c_ = new(), new(), new(), new()
    X = [x + y for x, y in zip(xs, ys)]
    outI = "".join(X) + o
    outII = "".join(X) + z + o

    def seq(parts):
        return "".join(parts)

    def omit(k):
        return X[:k] + X[k + 1:]

    def circ(args, k, l, tail, tensor):
        # tensor(X_1 .. ^X_k .. X_k o X_l .. X_{n+1}, tail) with X_k o X_l =
        # [[x_k,y_k,x_l]] ^ y_l + x_l ^ [[x_k,y_k,y_l]]
        before = X[:k] + X[k + 1:l]
        after = X[l + 1:]
        s1 = seq(before) + c_ + ys[l] + seq(after) + tail
        s2 = seq(before) + xs[l] + c_ + seq(after) + tail
        t1 = einsum(f"{xs[k]}{ys[k]}{xs[l]}{c_},{s1}->{args}", T, tensor)
        t2 = einsum(f"{xs[k]}{ys[k]}{ys[l]}{c_},{s2}->{args}", T, tensor)
        return t1 + t2

    # d_I
    head = seq(X[:n])
    dI = (einsum(f"{xs[n]}{o}{q},{head}{ys[n]}{q}->{outI}", rho, g)
          - einsum(f"{ys[n]}{o}{q},{head}{xs[n]}{q}->{outI}", rho, g)
          - einsum(f"{xs[n]}{ys[n]}{c_},{head}{c_}{o}->{outI}", B, g)) * sign_n
    for k in range(n):
        sgn = 1 if k % 2 == 0 else -1          # (-1)^(k+1) with 1-based k
        dI = dI + einsum(f"{X[k]}{o}{q},{seq(omit(k))}{q}->{outI}", D, f) * sgn
    for k in range(n + 1):
        for l in range(k + 1, n + 1):
            sgn = -1 if k % 2 == 0 else 1      # (-1)^k with 1-based k
            dI = dI + circ(outI, k, l, o, f) * sgn

    # d_II
    dII = (einsum(f"{ys[n]}{z}{o}{q},{head}{xs[n]}{q}->{outII}", mu, g)
           - einsum(f"{xs[n]}{z}{o}{q},{head}{ys[n]}{q}->{outII}", mu, g)) * sign_n
    for k in range(n + 1):
        sgn = 1 if k % 2 == 0 else -1
        dII = dII + einsum(f"{X[k]}{o}{q},{seq(omit(k))}{z}{q}->{outII}", D, g) * sgn
    for k in range(n + 1):
        for l in range(k + 1, n + 1):
            sgn = -1 if k % 2 == 0 else 1
            dII = dII + circ(outII, k, l, z + o, g) * sgn
    for k in range(n + 1):
        sgn = -1 if k % 2 == 0 else 1
        dII = dII + einsum(f"{X[k]}{z}{c_},{seq(omit(k))}{c_}{o}->{outII}", T, g) * sgn
    return Cochain(c.degree + 1, dI, dII)


def coboundary(c: Cochain, rep: Representation) -> Cochain:
    """d = (d_I, d_II) evaluated on all basis tuples."""
    _check_shapes(c, rep)
    if c.degree == 1:
        return _degree_one(c.f, rep)
    return _higher(c, rep)


def _as_cochain(f) -> Cochain:
    return f if isinstance(f, Cochain) else Cochain(1, f if isinstance(f, Tensor) else Tensor(f))


def is_one_cocycle(f, rep: Representation) -> bool:
    """f([x,y]) = rho(x)f(y) - rho(y)f(x) and the ternary rule, on all basis tuples."""
    c = _as_cochain(f)
    if c.degree != 1:
        raise ValueError("is_one_cocycle takes a 1-cochain")
    return coboundary(c, rep).is_zero()


def is_derivation(delta, alg: LYAlgebra) -> bool:
    """Leibniz rules for both brackets, evaluated directly."""
    d = delta if isinstance(delta, Tensor) else Tensor(delta)
    if d.shape != (alg.dim, alg.dim):
        raise ValueError(f"derivation must be {alg.dim} x {alg.dim}")
    B, T = alg.binary, alg.ternary
    lhs = einsum("xya,oa->xyo", B, d)
    rhs = einsum("ax,ayo->xyo", d, B) + einsum("ay,xao->xyo", d, B)
    if lhs != rhs:
        return False
    lhs = einsum("xyza,oa->xyzo", T, d)
    rhs = (einsum("ax,ayzo->xyzo", d, T) + einsum("ay,xazo->xyzo", d, T)
           + einsum("az,xyao->xyzo", d, T))
    return lhs == rhs


def coboundary_squared(c: Cochain, rep: Representation) -> Cochain:
    return coboundary(coboundary(c, rep), rep)

