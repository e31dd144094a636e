"""Exact rational scalars and dense tensors.

A :class:`Tensor` stores an integer numerator array together with one common
positive denominator, kept in lowest terms.  Numerators live in ``int64``
whenever the magnitudes allow it and fall back to Python integers (``object``
arrays) otherwise, so contractions run at machine speed on desk-scale data
while staying exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Tensor",
    "parse_rational",
    "format_rational",
    "as_fraction",
    "zeros",
    "identity",
    "einsum",
    "permute",
    "compose_perms",
    "switch",
    "contract_pairing",
    "basis_vector",
    "det",
    "inverse",
    "rank",
    "stack",
]

# headroom below 2**63 for one extra addition
_SAFE = 2**62


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"malformed rational: {value!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in rational: {value!r}")
        return Fraction(p, q)
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value) -> str:
    q = as_fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_fraction(value) -> Fraction:
    if isinstance(value, (np.integer,)):
        return Fraction(int(value))
    return parse_rational(value)


def _max_abs(num: np.ndarray) -> int:
    if num.size == 0:
        return 0
    if num.dtype == object:
        return max(abs(int(v)) for v in num.flat)
    return int(np.abs(num).max())


def _fit(num: np.ndarray) -> np.ndarray:
    """Return ``num`` as int64 if every entry fits, else as an object array."""
    if num.dtype == object:
        if _max_abs(num) < _SAFE:
            return num.astype(np.int64)
        return num
    return num.astype(np.int64, copy=False)


def _objects(num: np.ndarray) -> np.ndarray:
    if num.dtype == object:
        return num
    out = np.empty(num.shape, dtype=object)
    out.flat[:] = [int(v) for v in num.flat]
    return out


def _array_gcd(num: np.ndarray) -> int:
    if num.size == 0:
        return 0
    if num.dtype == object:
        return reduce(math.gcd, (int(v) for v in num.flat), 0)
    return int(np.gcd.reduce(np.abs(num), axis=None))


def _scale(num: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return num
    if num.dtype != object and _max_abs(num) * k < _SAFE:
        return num * np.int64(k)
    return _objects(num) * k


class Tensor:
    """Immutable dense tensor with exact rational entries."""

    __slots__ = ("_num", "_den")

    def __init__(self, entries, shape: Sequence[int] | None = None):
        arr = np.array(entries, dtype=object)
        if shape is not None:
            arr = arr.reshape(tuple(shape))
        fr = np.empty(arr.shape, dtype=object)
        fr.flat[:] = [as_fraction(v) for v in arr.flat]
        den = reduce(math.lcm, (q.denominator for q in fr.flat), 1)
        num = np.empty(arr.shape, dtype=object)
        num.flat[:] = [q.numerator * (den // q.denominator) for q in fr.flat]
        self._set(num, den)

    @classmethod
    def _raw(cls, num: np.ndarray, den: int) -> "Tensor":
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    def _set(self, num: np.ndarray, den: int) -> None:
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = math.gcd(_array_gcd(num), den)
        if g == 0:  # all-zero numerators
            g = den
        if g > 1:
            num = num // g if num.dtype != object else np.array(
                [int(v) // g for v in num.flat], dtype=object).reshape(num.shape)
            den //= g
        num = _fit(num)
        num.setflags(write=False)
        self._num = num
        self._den = int(den)

    # -- basic properties -------------------------------------------------
    @property
    def shape(self) -> tuple[int, ...]:
        return self._num.shape

    @property
    def ndim(self) -> int:
        return self._num.ndim

    @property
    def den(self) -> int:
        return self._den

    @property
    def num(self) -> np.ndarray:
        return self._num

    def __getitem__(self, idx):
        sub = self._num[idx]
        if isinstance(sub, np.ndarray):
            return Tensor._raw(np.array(sub), self._den)
        return Fraction(int(sub), self._den)

    def to_fractions(self) -> np.ndarray:
        out = np.empty(self.shape, dtype=object)
        out.flat[:] = [Fraction(int(v), self._den) for v in self._num.flat]
        return out

    def tolist(self):
        return self.to_fractions().tolist()

    def is_zero(self) -> bool:
        return not self._num.any()

    def nonzero(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Sparse ``(index, value)`` listing in row-major order."""
        idx = np.argwhere(self._num != 0)
        return [(tuple(int(i) for i in ix), Fraction(int(self._num[tuple(ix)]), self._den))
                for ix in idx]

    # -- arithmetic --------------------------------------------------------
    def _aligned(self, other: "Tensor"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        den = math.lcm(self._den, other._den)
        a = _scale(self._num, den // self._den)
        b = _scale(other._num, den // other._den)
        if a.dtype != b.dtype:
            a, b = _objects(a), _objects(b)
        elif a.dtype != object and _max_abs(a) + _max_abs(b) >= 2**63:
            a, b = _objects(a), _objects(b)
        return a, b, den

    def __add__(self, other: "Tensor") -> "Tensor":
        a, b, den = self._aligned(other)
        return Tensor._raw(a + b, den)

    def __sub__(self, other: "Tensor") -> "Tensor":
        a, b, den = self._aligned(other)
        return Tensor._raw(a - b, den)

    def __neg__(self) -> "Tensor":
        return Tensor._raw(-_objects(self._num) if self._num.dtype == object else -self._num,
                           self._den)

    def __mul__(self, scalar) -> "Tensor":
        q = as_fraction(scalar)
        num = _scale(self._num, abs(q.numerator))
        if q.numerator < 0:
            num = -num
        return Tensor._raw(num, self._den * q.denominator)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Tensor":
        return self * (1 / as_fraction(scalar))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.shape == other.shape and self._den == other._den
                and bool(np.array_equal(_objects(self._num), _objects(other._num))))

    def __hash__(self):
        return hash((self.shape, self._den, tuple(int(v) for v in self._num.flat)))

    def __repr__(self) -> str:
        nz = self.nonzero()
        body = ", ".join(f"{list(i)}: {format_rational(v)}" for i, v in nz[:8])
        more = ", ..." if len(nz) > 8 else ""
        return f"Tensor(shape={self.shape}, nonzero={{{body}{more}}})"

    # -- reshaping ---------------------------------------------------------
    def permute(self, perm: Sequence[int]) -> "Tensor":
        return permute(self, perm)

    @property
    def T(self) -> "Tensor":
        if self.ndim != 2:
            raise ValueError("transpose needs a matrix")
        return permute(self, (1, 0))

    def reshape(self, *shape) -> "Tensor":
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        return Tensor._raw(self._num.reshape(shape), self._den)


def zeros(shape: Sequence[int]) -> Tensor:
    return Tensor._raw(np.zeros(tuple(shape), dtype=np.int64), 1)


def identity(n: int) -> Tensor:
    return Tensor._raw(np.eye(n, dtype=np.int64), 1)


def basis_vector(n: int, i: int) -> Tensor:
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return Tensor._raw(v, 1)


def stack(tensors: Sequence[Tensor]) -> Tensor:
    """Stack equally shaped tensors along a new leading axis."""
    if not tensors:
        raise ValueError("nothing to stack")
    den = reduce(math.lcm, (t.den for t in tensors), 1)
    nums = [_objects(_scale(t.num, den // t.den)) for t in tensors]
    return Tensor._raw(np.stack(nums), den)


def einsum(subscripts: str, *operands: Tensor) -> Tensor:
    """Exact ``numpy.einsum`` over rational tensors.

    Runs on int64 numerators when a worst-case magnitude bound allows it.
    """
    lhs, _, out = subscripts.replace(" ", "").partition("->")
    inputs = lhs.split(",")
    if len(inputs) != len(operands):
        raise ValueError("operand count does not match subscripts")
    extents: dict[str, int] = {}
    for spec, t in zip(inputs, operands):
        if len(spec) != t.ndim:
            raise ValueError(f"subscript {spec!r} does not match tensor of rank {t.ndim}")
        for ch, n in zip(spec, t.shape):
            if extents.setdefault(ch, n) != n:
                raise ValueError(f"extent mismatch on index {ch!r}")
    summed = set("".join(inputs)) - set(out)
    terms = math.prod(extents[c] for c in summed) if summed else 1
    bound = terms * math.prod(_max_abs(t.num) for t in operands)
    den = math.prod(t.den for t in operands)
    if bound < _SAFE and all(t.num.dtype != object for t in operands):
        num = np.einsum(subscripts, *(t.num for t in operands), optimize=len(operands) > 2)
    else:
        num = np.einsum(subscripts, *(_objects(t.num) for t in operands))
    return Tensor._raw(np.asarray(num), den)


def permute(t: Tensor, perm: Sequence[int]) -> Tensor:
    """Rearrange tensor slots: output slot ``k`` carries input slot ``perm[k]``.

    For a basis tensor ``e_{i_0} (x) ... (x) e_{i_{n-1}}`` the result is
    ``e_{i_{perm[0]}} (x) ... (x) e_{i_{perm[n-1]}}``.
    """
    perm = tuple(int(p) for p in perm)
    if len(perm) != t.ndim or sorted(perm) != list(range(t.ndim)):
        raise ValueError(f"{perm} is not a permutation of {t.ndim} axes")
    return Tensor._raw(np.transpose(t.num, perm), t.den)


def switch(order: int, i: int, j: int) -> tuple[int, ...]:
    """The switching operator sigma_ij on ``order`` slots (1-based i, j)."""
    if not (1 <= i <= order and 1 <= j <= order):
        raise ValueError("slot out of range")
    perm = list(range(order))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return tuple(perm)


def compose_perms(*perms: Sequence[int]) -> tuple[int, ...]:
    """Compose slot permutations left to right (the first one is applied first)."""
    if not perms:
        raise ValueError("need at least one permutation")
    result = tuple(range(len(perms[0])))
    for p in perms:
        if len(p) != len(result):
            raise ValueError("axis-count mismatch")
        # permute(permute(t, result), p) == permute(t, [result[k] for k in p])
        result = tuple(result[k] for k in p)
    return result


def contract_pairing(t: Tensor, covectors: Sequence) -> Tensor | Fraction:
    """Pair the leading slots of ``t`` with the given covectors.

    Remaining slots survive; a full contraction returns a Fraction.
    """
    if len(covectors) > t.ndim:
        raise ValueError("more covectors than tensor slots")
    out = t
    for cv in covectors:
        cv = cv if isinstance(cv, Tensor) else Tensor(list(cv))
        if cv.ndim != 1 or cv.shape[0] != out.shape[0]:
            raise ValueError("covector extent mismatch")
        spec = "abcdefghijklmnop"[: out.ndim]
        out = einsum(f"{spec},{spec[0]}->{spec[1:]}", out, cv)
    if out.ndim == 0:
        return Fraction(int(out.num), out.den)
    return out


def _to_sympy(m: Tensor):
    import sympy

    if m.ndim != 2:
        raise ValueError("matrix expected")
    return sympy.Matrix(m.shape[0], m.shape[1],
                        [sympy.Rational(int(v), m.den) for v in m.num.flat])


def det(m: Tensor) -> Fraction:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix expected")
    d = _to_sympy(m).det()
    return Fraction(int(d.p), int(d.q))


def inverse(m: Tensor) -> Tensor:
    if det(m) == 0:
        raise ValueError("matrix is singular")
    inv = _to_sympy(m).inv()
    return Tensor([[Fraction(int(v.p), int(v.q)) for v in row] for row in inv.tolist()])


def rank(m: Tensor) -> int:
    return int(_to_sympy(m).rank())


def all_indices(shape: Iterable[int]):
    return product(*(range(n) for n in shape))
