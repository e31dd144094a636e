"""JSON file formats.

Indices are 1-based in files and rationals are "p/q" strings.  Only nonzero
constants are listed; skew partners may be omitted and are filled in.

    algebra       {"dim": n, "binary": [[i,j,k,c]...], "ternary": [[i,j,k,l,c]...]}
    representation{"algebra": A, "vdim": m, "rho": [[i, M]...], "mu": [[i, j, M]...]}
                  or {"algebra": A, "kind": "adjoint" | "coadjoint"}
    r-matrix      {"algebra": A, "r": M}
    operator      {"representation": V, "T": M}
    cobracket     {"algebra": A, "delta": [[i,j,k,c]...], "omega": [[i,j,k,l,c]...],
                   "splits": {"delta1": [...], ...}}
    pre-LY        {"dim": n, "star": [[i,j,k,c]...], "triple": [[i,j,k,l,c]...]}
    matched pair  {"g1": A, "g2": A, "rho1": [[i, M]...], "mu1": [[i, j, M]...],
                   "rho2": ..., "mu2": ...}

A nested A or V is an inline object, a shipped fixture name such as
"dim2", or a path relative to the referring file.  Keys starting with "_"
are comments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import LYAlgebra
from .bialgebra import SPLIT_NAMES, Cobracket, MatchedPairData
from .linalg import Tensor, format_rational, parse_rational
from .pre_ly import PreLY
from .representation import Representation, adjoint_rep, coadjoint_rep
from .yang_baxter import TwoTensor

__all__ = [
    "InputError",
    "Operator",
    "parse_input",
    "load",
    "loads",
    "dump",
    "dumps",
    "to_json",
    "fixture_path",
    "fixture_names",
]


class InputError(ValueError):
    """A file that cannot be turned into a valid object."""


@dataclass(frozen=True)
class Operator:
    """A linear map T: V -> g stored as a dim(g) x dim(V) matrix."""

    rep: Representation
    T: Tensor

    def __post_init__(self):
        want = (self.rep.base.dim, self.rep.vdim)
        if self.T.shape != want:
            raise ValueError(f"operator must have shape {want}, got {self.T.shape}")


# --------------------------------------------------------------------------
# locating files


def fixture_names() -> list[str]:
    root = resources.files("lyalg") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str) -> Path:
    stem = Path(name).name
    stem = stem[:-5] if stem.endswith(".json") else stem
    path = Path(str(resources.files("lyalg") / "fixtures" / f"{stem}.json"))
    if not path.exists():
        raise InputError(f"no shipped fixture named {stem!r}")
    return path


def _resolve(ref: str, base: Path | None) -> Path:
    p = Path(ref)
    candidates = [p] if p.is_absolute() else ([base / p] if base else []) + [p]
    for c in candidates:
        if c.is_file():
            return c
    # "examples/dim2.json" and "dim2" both name a shipped fixture
    return fixture_path(ref)


# --------------------------------------------------------------------------
# parsing helpers


class _Ctx:
    def __init__(self, base: Path | None, where: str = "$"):
        self.base = base
        self.where = where

    def at(self, key) -> "_Ctx":
        return _Ctx(self.base, f"{self.where}.{key}" if isinstance(key, str) else f"{self.where}[{key}]")

    def fail(self, msg: str) -> InputError:
        return InputError(f"{self.where}: {msg}")


def _rational(v, ctx: _Ctx):
    try:
        return parse_rational(v)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise ctx.fail(f"bad rational {v!r}: {e}") from None


def _index(i, n: int, ctx: _Ctx) -> int:
    if isinstance(i, bool) or not isinstance(i, int):
        raise ctx.fail(f"index {i!r} is not an integer")
    if not 1 <= i <= n:
        raise ctx.fail(f"index {i} out of range 1..{n}")
    return i - 1


def _entries(data, arity: int, n: int, ctx: _Ctx) -> list[tuple]:
    if not isinstance(data, list):
        raise ctx.fail("expected a list of entries")
    out = []
    for k, row in enumerate(data):
        c = ctx.at(k)
        if not isinstance(row, list) or len(row) != arity + 1:
            raise c.fail(f"expected {arity} indices and a coefficient")
        idx = tuple(_index(i, n, c) for i in row[:arity])
        out.append(idx + (_rational(row[arity], c),))
    return out


def _one_based(idx) -> tuple:
    return tuple(i + 1 for i in idx)


def _dense(shape: tuple, entries: list[tuple], pair: tuple[int, int] | None, ctx: _Ctx) -> Tensor:
    """Dense tensor from sparse entries; with ``pair`` each entry is mirrored
    with a sign across those two index positions."""
    arr = np.full(shape, None, dtype=object)
    for k, (*idx, c) in enumerate(entries):
        idx = tuple(idx)
        keys = [(idx, c)]
        if pair is not None:
            a, b = pair
            if idx[a] == idx[b] and c != 0:
                raise ctx.at(k).fail(f"entry {_one_based(idx)} violates skew-symmetry")
            partner = list(idx)
            partner[a], partner[b] = partner[b], partner[a]
            keys.append((tuple(partner), -c))
        for key, val in keys:
            old = arr[key]
            if old is not None and old != val:
                raise ctx.at(k).fail(f"conflicting constants at {_one_based(key)}")
            arr[key] = val
    arr[arr == None] = 0  # noqa: E711
    return Tensor(arr)


def _matrix(data, rows: int, cols: int, ctx: _Ctx) -> Tensor:
    if not isinstance(data, list) or len(data) != rows:
        raise ctx.fail(f"expected a {rows} x {cols} matrix")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ctx.at(i).fail(f"expected a row of length {cols}")
        out.append([_rational(v, ctx.at(i).at(j)) for j, v in enumerate(row)])
    return Tensor(out, (rows, cols))


def _dim(data, ctx: _Ctx) -> int:
    n = data.get("dim")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ctx.at("dim").fail(f"dimension must be a positive integer, got {n!r}")
    return n


def _require(data: dict, key: str, ctx: _Ctx):
    if key not in data:
        raise ctx.fail(f"missing key {key!r}")
    return data[key]


# --------------------------------------------------------------------------
# object parsers


def _algebra(data: dict, ctx: _Ctx) -> LYAlgebra:
    n = _dim(data, ctx)
    b = _entries(data.get("binary", []), 3, n, ctx.at("binary"))
    t = _entries(data.get("ternary", []), 4, n, ctx.at("ternary"))
    B = _dense((n,) * 3, b, (0, 1), ctx.at("binary"))
    T = _dense((n,) * 4, t, (0, 1), ctx.at("ternary"))
    return LYAlgebra(B, T, data.get("name", ""))


def _ref(value, ctx: _Ctx, kind: str):
    if isinstance(value, str):
        path = _resolve(value, ctx.base)
        obj = load(path)
    elif isinstance(value, dict):
        obj = _parse(value, ctx)
    else:
        raise ctx.fail(f"expected an inline {kind} or a file reference")
    return obj


def _algebra_ref(value, ctx: _Ctx) -> LYAlgebra:
    obj = _ref(value, ctx, "algebra")
    if not isinstance(obj, LYAlgebra):
        raise ctx.fail(f"expected an algebra, got {type(obj).__name__}")
    return obj


def _rho_list(data, n: int, m: int, ctx: _Ctx) -> Tensor:
    arr = np.zeros((n, m, m), dtype=object)
    for k, row in enumerate(data or []):
        c = ctx.at(k)
        if not isinstance(row, list) or len(row) != 2:
            raise c.fail("expected [i, matrix]")
        i = _index(row[0], n, c)
        arr[i] = _matrix(row[1], m, m, c.at(1)).to_fractions()
    return Tensor(arr)


def _mu_list(data, n: int, m: int, ctx: _Ctx) -> Tensor:
    arr = np.zeros((n, n, m, m), dtype=object)
    for k, row in enumerate(data or []):
        c = ctx.at(k)
        if not isinstance(row, list) or len(row) != 3:
            raise c.fail("expected [i, j, matrix]")
        i, j = _index(row[0], n, c), _index(row[1], n, c)
        arr[i, j] = _matrix(row[2], m, m, c.at(2)).to_fractions()
    return Tensor(arr)


def _representation(data: dict, ctx: _Ctx) -> Representation:
    alg = _algebra_ref(_require(data, "algebra", ctx), ctx.at("algebra"))
    kind = data.get("kind")
    if kind == "adjoint":
        return adjoint_rep(alg)
    if kind == "coadjoint":
        return coadjoint_rep(alg)
    if kind is not None:
        raise ctx.at("kind").fail(f"unknown representation kind {kind!r}")
    m = data.get("vdim")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ctx.at("vdim").fail(f"vdim must be a positive integer, got {m!r}")
    return Representation(alg, _rho_list(data.get("rho"), alg.dim, m, ctx.at("rho")),
                          _mu_list(data.get("mu"), alg.dim, m, ctx.at("mu")))


def _rep_ref(value, ctx: _Ctx) -> Representation:
    obj = _ref(value, ctx, "representation")
    if not isinstance(obj, Representation):
        raise ctx.fail(f"expected a representation, got {type(obj).__name__}")
    return obj


def _cobracket_parts(data, n: int, ctx: _Ctx) -> tuple[Tensor, Tensor]:
    d = _entries(data.get("delta", []), 3, n, ctx.at("delta"))
    w = _entries(data.get("omega", []), 4, n, ctx.at("omega"))
    # skew partners live in the first two tensor slots, after the argument
    return (_dense((n,) * 3, d, (1, 2), ctx.at("delta")),
            _dense((n,) * 4, w, (1, 2), ctx.at("omega")))


def _cobracket(data: dict, ctx: _Ctx) -> Cobracket:
    alg = _algebra_ref(_require(data, "algebra", ctx), ctx.at("algebra"))
    n = alg.dim
    delta, omega = _cobracket_parts(data, n, ctx)
    splits = None
    if "splits" in data:
        raw = data["splits"]
        sc = ctx.at("splits")
        if not isinstance(raw, dict):
            raise sc.fail("splits must be an object")
        splits = {}
        for key in SPLIT_NAMES:
            order = 3 if key.startswith("delta") else 4
            ents = _entries(raw.get(key, []), order, n, sc.at(key))
            splits[key] = _dense((n,) * order, ents, (1, 2), sc.at(key))
    try:
        return Cobracket(alg, delta, omega, splits, data.get("name", ""))
    except ValueError as e:
        raise ctx.fail(str(e)) from None


def _pre_ly(data: dict, ctx: _Ctx) -> PreLY:
    n = _dim(data, ctx)
    s = _entries(data.get("star", []), 3, n, ctx.at("star"))
    t = _entries(data.get("triple", []), 4, n, ctx.at("triple"))
    return PreLY(_dense((n,) * 3, s, None, ctx.at("star")),
                 _dense((n,) * 4, t, None, ctx.at("triple")), data.get("name", ""))


def _matched_pair(data: dict, ctx: _Ctx) -> MatchedPairData:
    g1 = _algebra_ref(_require(data, "g1", ctx), ctx.at("g1"))
    g2 = _algebra_ref(_require(data, "g2", ctx), ctx.at("g2"))
    return MatchedPairData(
        g1, g2,
        _rho_list(data.get("rho1"), g1.dim, g2.dim, ctx.at("rho1")),
        _mu_list(data.get("mu1"), g1.dim, g2.dim, ctx.at("mu1")),
        _rho_list(data.get("rho2"), g2.dim, g1.dim, ctx.at("rho2")),
        _mu_list(data.get("mu2"), g2.dim, g1.dim, ctx.at("mu2")))


def _kind(data: dict) -> str:
    if "star" in data or "triple" in data:
        return "pre_ly"
    if "g1" in data:
        return "matched_pair"
    if "delta" in data or "omega" in data:
        return "cobracket"
    if "r" in data:
        return "rmatrix"
    if "T" in data:
        return "operator"
    if "rho" in data or "kind" in data or "vdim" in data:
        return "representation"
    if "dim" in data:
        return "algebra"
    raise InputError("cannot tell what kind of object this file describes")


def _parse(data, ctx: _Ctx):
    if not isinstance(data, dict):
        raise ctx.fail("expected a JSON object")
    kind = _kind(data)
    try:
        if kind == "algebra":
            return _algebra(data, ctx)
        if kind == "representation":
            return _representation(data, ctx)
        if kind == "rmatrix":
            alg = _algebra_ref(_require(data, "algebra", ctx), ctx.at("algebra"))
            return TwoTensor(alg, _matrix(data["r"], alg.dim, alg.dim, ctx.at("r")))
        if kind == "operator":
            rep = _rep_ref(_require(data, "representation", ctx), ctx.at("representation"))
            return Operator(rep, _matrix(data["T"], rep.base.dim, rep.vdim, ctx.at("T")))
        if kind == "cobracket":
            return _cobracket(data, ctx)
        if kind == "pre_ly":
            return _pre_ly(data, ctx)
        return _matched_pair(data, ctx)
    except InputError:
        raise
    except (ValueError, ArithmeticError) as e:
        raise ctx.fail(str(e)) from None


def loads(text: str, base: Path | None = None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    return _parse(data, _Ctx(base))


def load(path) -> Any:
    p = Path(path)
    if not p.is_file():
        p = _resolve(str(path), None)
    return loads(p.read_text(), p.parent)


def parse_input(path):
    """Validated LYAlgebra, Representation, TwoTensor, Operator, Cobracket, PreLY or MatchedPairData."""
    return load(path)


# --------------------------------------------------------------------------
# serialization


def _sparse(t: Tensor, pair: tuple[int, int] | None) -> list:
    """Nonzero entries, keeping one representative of each skew pair."""
    out = []
    for idx, v in t.nonzero():
        if pair is not None and idx[pair[0]] > idx[pair[1]]:
            continue
        out.append([i + 1 for i in idx] + [format_rational(v)])
    return out


def _matrix_json(m: Tensor) -> list:
    return [[format_rational(v) for v in row] for row in m.to_fractions().tolist()]


def _rho_json(rho: Tensor) -> list:
    return [[i + 1, _matrix_json(rho[i])] for i in range(rho.shape[0]) if not rho[i].is_zero()]


def _mu_json(mu: Tensor) -> list:
    n = mu.shape[0]
    return [[i + 1, j + 1, _matrix_json(mu[i, j])]
            for i in range(n) for j in range(n) if not mu[i, j].is_zero()]


def to_json(obj) -> dict:
    if isinstance(obj, LYAlgebra):
        out = {"dim": obj.dim, "binary": _sparse(obj.binary, (0, 1)),
               "ternary": _sparse(obj.ternary, (0, 1))}
        if obj.name:
            out["name"] = obj.name
        return out
    if isinstance(obj, Representation):
        return {"algebra": to_json(obj.base), "vdim": obj.vdim,
                "rho": _rho_json(obj.rho), "mu": _mu_json(obj.mu)}
    if isinstance(obj, TwoTensor):
        return {"algebra": to_json(obj.alg), "r": _matrix_json(obj.coeffs)}
    if isinstance(obj, Operator):
        return {"representation": to_json(obj.rep), "T": _matrix_json(obj.T)}
    if isinstance(obj, Cobracket):
        out = {"algebra": to_json(obj.alg), "delta": _sparse(obj.delta, (1, 2)),
               "omega": _sparse(obj.omega, (1, 2))}
        if obj.splits is not None:
            out["splits"] = {k: _sparse(obj.splits[k], (1, 2)) for k in SPLIT_NAMES}
        if obj.name:
            out["name"] = obj.name
        return out
    if isinstance(obj, PreLY):
        out = {"dim": obj.dim, "star": _sparse(obj.star, None),
               "triple": _sparse(obj.triple, None)}
        if obj.name:
            out["name"] = obj.name
        return out
    if isinstance(obj, MatchedPairData):
        return {"g1": to_json(obj.g1), "g2": to_json(obj.g2),
                "rho1": _rho_json(obj.rho1), "mu1": _mu_json(obj.mu1),
                "rho2": _rho_json(obj.rho2), "mu2": _mu_json(obj.mu2)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=1, sort_keys=True)


def dump(obj, path) -> None:
    Path(path).write_text(dumps(obj) + "\n")
