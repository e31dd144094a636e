"""Small exhaustive searches over coefficient grids."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

import numpy as np

from .algebra import LYAlgebra
from .bialgebra import enumerate_double_constructions
from .linalg import Tensor, as_fraction
from .pre_ly import search_pre_ly
from .yang_baxter import TwoTensor, is_cybe_solution

__all__ = [
    "skew_grid",
    "search_rmatrix",
    "enumerate_double_constructions",
    "search_pre_ly",
]


def skew_grid(n: int, values: Iterable, max_support: int | None = None) -> Iterator[Tensor]:
    """Skew n x n matrices with upper entries in ``values``, sparsest first.

    Order is deterministic: by support size, then by position, then by the
    order of ``values``.
    """
    vals = [as_fraction(v) for v in values]
    nz = [v for v in vals if v != 0]
    slots = list(itertools.combinations(range(n), 2))
    top = len(slots) if max_support is None else min(max_support, len(slots))
    for s in range(top + 1):
        for pos in itertools.combinations(range(len(slots)), s):
            for coeffs in itertools.product(nz, repeat=s):
                R = np.zeros((n, n), dtype=object)
                for p, c in zip(pos, coeffs):
                    i, j = slots[p]
                    R[i, j], R[j, i] = c, -c
                yield Tensor(R)


def search_rmatrix(alg: LYAlgebra, values=(-1, 0, 1), max_support: int | None = None) -> list[TwoTensor]:
    """All skew grid tensors solving the classical Yang-Baxter equation."""
    out = []
    for R in skew_grid(alg.dim, values, max_support):
        r = TwoTensor(alg, R)
        if is_cybe_solution(r):
            out.append(r)
    return out
