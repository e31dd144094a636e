"""Command-line entry point.

Exit codes: 0 every check passed, 1 some check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import LYAlgebra, check_ly_axioms
from .bialgebra import (Cobracket, MatchedPairData, bowtie_product, coadjoint_matched_pair,
                        enumerate_double_constructions)
from .report import UnknownSuite, run_suite
from .representation import Representation
from .search import search_rmatrix
from .yang_baxter import TwoTensor, lift_rb_to_rmatrix

_KINDS = {
    "check-algebra": (LYAlgebra, None),
    "check-rep": (Representation, None),
    "check-cybe": (TwoTensor, None),
    "check-rb": (io.Operator, "rota-baxter"),
    "check-bialgebra": (Cobracket, "double-construction"),
    "check-matched-pair": ((MatchedPairData, Cobracket), "matched-pair"),
    "check-manin": (Cobracket, "manin"),
    "report": (object, None),
}


class _Usage(Exception):
    pass


def _grid(text: str) -> list:
    try:
        return [io.parse_rational(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise _Usage(f"bad --grid value {text!r}: {e}") from None


def _load(path: str, kind):
    obj = io.parse_input(path)
    if not isinstance(obj, kind):
        want = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise _Usage(f"{path} holds a {type(obj).__name__}, expected {want}")
    return obj


def _emit_report(report, fmt: str) -> int:
    print(report.to_json() if fmt == "json" else report.to_text())
    return report.exit_code


def _emit(payload: dict, ok: bool, fmt: str, text: str) -> int:
    print(json.dumps(payload, indent=1, sort_keys=True) if fmt == "json" else text)
    return 0 if ok else 1


def _check(args) -> int:
    kind, suite = _KINDS[args.command]
    obj = _load(args.input, kind)
    return _emit_report(run_suite(obj, args.suite or suite), args.format)


def _build_double(args) -> int:
    c = _load(args.input, Cobracket)
    G = bowtie_product(coadjoint_matched_pair(c), f"{c.alg.name or 'g'}+g*")
    ok = check_ly_axioms(G).passed
    text = io.dumps(G) + f"\n# double is {'' if ok else 'not '}a Lie-Yamaguti algebra"
    return _emit({"double": io.to_json(G), "is_ly": ok}, ok, args.format, text)


def _lift_rb(args) -> int:
    op = _load(args.input, io.Operator)
    r = lift_rb_to_rmatrix(op.T, op.rep)
    report = run_suite(op, "lift")
    payload = {"r": io.to_json(r), "report": report.as_dict()}
    return _emit(payload, report.passed, args.format, io.dumps(r) + "\n" + report.to_text())


def _search_rmatrix(args) -> int:
    alg = _load(args.input, LYAlgebra)
    found = search_rmatrix(alg, _grid(args.grid), args.max_support)
    mats = [io.to_json(r)["r"] for r in found]
    text = f"{len(found)} skew solutions\n" + "\n".join(json.dumps(m) for m in mats)
    return _emit({"count": len(found), "solutions": mats}, True, args.format, text)


def _search_double(args) -> int:
    alg = _load(args.input, LYAlgebra)
    grid = [int(v) for v in _grid(args.grid) if v == int(v)]
    found = list(enumerate_double_constructions(alg, grid, args.max_support or 2))
    nonzero = [c for c in found if not c.is_zero()]
    items = [{k: v for k, v in io.to_json(c).items() if k in ("delta", "omega")} for c in nonzero]
    text = f"{len(found)} passing cobrackets, {len(nonzero)} nonzero\n" + "\n".join(
        json.dumps(i, sort_keys=True) for i in items)
    return _emit({"count": len(found), "nonzero": items}, True, args.format, text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lyalg", description="Exact checks for Lie-Yamaguti algebras, "
                                "representations, r-matrices and bialgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, func, suite=False, grid=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", "-i", required=True, help="JSON file or shipped fixture name")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if suite:
            sp.add_argument("--suite", help="check suite (defaults per object kind)")
        if grid:
            sp.add_argument("--grid", default="-1,0,1", help="comma-separated coefficients")
            sp.add_argument("--max-support", type=int, default=None,
                            help="largest number of independent nonzero coefficients")
        sp.set_defaults(func=func)

    add("check-algebra", "LY axioms or adjoint representations", _check, suite=True)
    add("check-rep", "representation axioms", _check, suite=True)
    add("check-cybe", "classical Yang-Baxter equation", _check, suite=True)
    add("check-rb", "relative Rota-Baxter operator", _check, suite=True)
    add("check-bialgebra", "coalgebra, double construction, local cocycle or equivalence", _check,
        suite=True)
    add("check-matched-pair", "matched pair identities and bowtie agreement", _check, suite=True)
    add("check-manin", "standard Manin triple of a cobracket", _check, suite=True)
    add("build-double", "print the bowtie double of a cobracket", _build_double)
    add("lift-rb", "lift a relative Rota-Baxter operator to a 2-tensor", _lift_rb)
    add("search-rmatrix", "grid search for skew CYBE solutions", _search_rmatrix, grid=True)
    add("search-double", "grid search for double construction cobrackets", _search_double, grid=True)
    add("report", "run any suite on any input", _check, suite=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (io.InputError, _Usage, UnknownSuite, FileNotFoundError) as e:
        msg = e.args[0] if isinstance(e, UnknownSuite) and e.args else str(e)
        print(f"lyalg: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
