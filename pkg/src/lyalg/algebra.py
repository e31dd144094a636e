"""Lie-Yamaguti algebras stored as structure constants.

``binary[i, j, k]`` is the e_k coefficient of [e_i, e_j] and
``ternary[i, j, k, l]`` the e_l coefficient of [[e_i, e_j, e_k]].
Indices are 0-based here; files use 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .checks import AxiomReport, IdentityResult
from .linalg import Tensor, as_fraction, einsum, inverse, permute, zeros

__all__ = [
    "LYAlgebra",
    "evaluate_brackets",
    "check_ly_axioms",
    "ly_axiom_report",
    "from_lie_algebra",
    "check_homomorphism",
    "jacobi_residual",
    "abelian",
]


@dataclass(frozen=True, eq=True)
class LYAlgebra:
    binary: Tensor
    ternary: Tensor
    name: str = ""

    def __post_init__(self):
        n = self.binary.shape[0] if self.binary.ndim else 0
        if n <= 0 or self.binary.shape != (n, n, n):
            raise ValueError(f"binary constants must have shape (n, n, n), got {self.binary.shape}")
        if self.ternary.shape != (n, n, n, n):
            raise ValueError(f"ternary constants must have shape {(n,) * 4}, got {self.ternary.shape}")
        if self.binary != -permute(self.binary, (1, 0, 2)):
            raise ValueError("binary bracket is not skew-symmetric")
        if self.ternary != -permute(self.ternary, (1, 0, 2, 3)):
            raise ValueError("ternary bracket is not skew-symmetric in its first two arguments")

    @property
    def dim(self) -> int:
        return self.binary.shape[0]

    @classmethod
    def from_constants(cls, dim: int, binary: Iterable[Sequence] = (),
                       ternary: Iterable[Sequence] = (), name: str = "") -> "LYAlgebra":
        """Build from sparse 0-based ``(i, j, k, c)`` / ``(i, j, k, l, c)`` entries.

        Skew partners are filled in; an entry contradicting its partner raises.
        """
        b = np.full((dim,) * 3, None, dtype=object)
        t = np.full((dim,) * 4, None, dtype=object)
        for *idx, c in binary:
            _put_skew(b, tuple(idx), as_fraction(c))
        for *idx, c in ternary:
            _put_skew(t, tuple(idx), as_fraction(c))
        b[b == None] = 0  # noqa: E711
        t[t == None] = 0  # noqa: E711
        return cls(Tensor(b), Tensor(t), name)

    def bracket(self, x, y) -> Tensor:
        return evaluate_brackets(self, x, y)

    def triple(self, x, y, z) -> Tensor:
        return evaluate_brackets(self, x, y, z)

    def is_abelian(self) -> bool:
        return self.binary.is_zero() and self.ternary.is_zero()

    def transport(self, P: Tensor) -> "LYAlgebra":
        """Structure constants in the basis given by the columns of invertible ``P``."""
        Q = inverse(P)
        b = einsum("ai,bj,abc,kc->ijk", P, P, self.binary, Q)
        t = einsum("ai,bj,ck,abcd,ld->ijkl", P, P, P, self.ternary, Q)
        return LYAlgebra(b, t, self.name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"LYAlgebra{label}(dim={self.dim})"


def _put_skew(arr: np.ndarray, idx: tuple, c) -> None:
    if len(idx) != arr.ndim:
        raise ValueError(f"entry {idx} has wrong arity")
    for i in idx:
        if not 0 <= i < arr.shape[0]:
            raise IndexError(f"index {i + 1} out of range for dimension {arr.shape[0]}")
    partner = (idx[1], idx[0]) + idx[2:]
    if idx[0] == idx[1] and c != 0:
        raise ValueError(f"entry {tuple(i + 1 for i in idx)} violates skew-symmetry")
    for key, val in ((idx, c), (partner, -c)):
        old = arr[key]
        if old is not None and old != val:
            raise ValueError(f"conflicting constants at {tuple(i + 1 for i in key)}")
        arr[key] = val


def abelian(dim: int) -> LYAlgebra:
    return LYAlgebra(zeros((dim,) * 3), zeros((dim,) * 4), f"abelian{dim}")


def _vec(v, n: int) -> Tensor:
    v = v if isinstance(v, Tensor) else Tensor(list(v))
    if v.shape != (n,):
        raise ValueError(f"expected a vector of length {n}, got shape {v.shape}")
    return v


def evaluate_brackets(alg: LYAlgebra, *args) -> Tensor:
    """[x, y] for two arguments, [[x, y, z]] for three."""
    n = alg.dim
    vs = [_vec(a, n) for a in args]
    if len(vs) == 2:
        return einsum("i,j,ijk->k", vs[0], vs[1], alg.binary)
    if len(vs) == 3:
        return einsum("i,j,k,ijkl->l", vs[0], vs[1], vs[2], alg.ternary)
    raise ValueError("evaluate_brackets takes 2 or 3 vectors")


def _cyclic3(t: Tensor) -> Tensor:
    """Sum of t over cyclic shifts of its first three slots."""
    rest = tuple(range(3, t.ndim))
    return t + permute(t, (1, 2, 0) + rest) + permute(t, (2, 0, 1) + rest)


def jacobi_residual(B: Tensor) -> Tensor:
    """[[x,y],z] + cyclic, indexed (x, y, z, out)."""
    return _cyclic3(einsum("xya,azo->xyzo", B, B))


def check_ly_axioms(alg: LYAlgebra) -> AxiomReport:
    return ly_axiom_report(alg.binary, alg.ternary, alg.name or "algebra")


def ly_axiom_report(B: Tensor, T: Tensor, subject: str = "algebra") -> AxiomReport:
    """The four LY identities on raw constants (skewness is not assumed)."""
    # slot t[x,y,z,...] with the cyclic helper: position k of the output
    # tensor receives the argument at position perm[k]
    jac = _cyclic3(einsum("xya,azo->xyzo", B, B)) + _cyclic3(T)
    cyc = _cyclic3(einsum("xya,azwo->xyzwo", B, T))
    der = (einsum("xyao,zwa->xyzwo", T, B)
           - einsum("xyza,awo->xyzwo", T, B)
           - einsum("xywa,zao->xyzwo", T, B))
    fund = (einsum("zwta,xyao->xyzwto", T, T)
            - einsum("xyza,awto->xyzwto", T, T)
            - einsum("xywa,zato->xyzwto", T, T)
            - einsum("xyta,zwao->xyzwto", T, T))
    return AxiomReport(subject, [
        IdentityResult("mixed_jacobi", jac),
        IdentityResult("ternary_cyclic", cyc),
        IdentityResult("ternary_derivation", der),
        IdentityResult("fundamental", fund),
    ])


def from_lie_algebra(lie_binary: Tensor, name: str = "") -> LYAlgebra:
    """Lift a Lie algebra to the LY algebra with [[x,y,z]] = [[x,y],z]."""
    n = lie_binary.shape[0]
    if lie_binary.shape != (n, n, n):
        raise ValueError("Lie structure constants must have shape (n, n, n)")
    if lie_binary != -permute(lie_binary, (1, 0, 2)):
        raise ValueError("Lie bracket is not skew-symmetric")
    if not jacobi_residual(lie_binary).is_zero():
        raise ValueError("Lie bracket fails the Jacobi identity")
    T = einsum("xya,azo->xyzo", lie_binary, lie_binary)
    return LYAlgebra(lie_binary, T, name)


def check_homomorphism(f: Tensor, src: LYAlgebra, dst: LYAlgebra) -> bool:
    """``f`` is a dst.dim x src.dim matrix whose column i is f(e_i)."""
    if f.shape != (dst.dim, src.dim):
        raise ValueError(f"map must have shape {(dst.dim, src.dim)}, got {f.shape}")
    bin_lhs = einsum("xya,oa->xyo", src.binary, f)
    bin_rhs = einsum("px,qy,pqo->xyo", f, f, dst.binary)
    if bin_lhs != bin_rhs:
        return False
    tri_lhs = einsum("xyza,oa->xyzo", src.ternary, f)
    tri_rhs = einsum("px,qy,rz,pqro->xyzo", f, f, f, dst.ternary)
    return tri_lhs == tri_rhs
