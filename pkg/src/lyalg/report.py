"""Verification reports and the suites that produce them."""

from __future__ import annotations

import json
import time
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable

from .algebra import LYAlgebra, check_ly_axioms
from .bialgebra import (Cobracket, MatchedPairData, check_double_construction,
                        check_local_cocycle, check_matched_pair, coadjoint_matched_pair,
                        check_manin_triple, dual_structure, equivalence_report,
                        local_from_double, standard_manin_triple)
from .checks import AxiomReport, IdentityResult
from .io import Operator
from .linalg import identity
from .pre_ly import (PreLY, ad_r_representation, canonical_rmatrix, check_pre_ly_axioms,
                     sub_adjacent)
from .representation import (Representation, adjoint_rep, check_representation,
                             coadjoint_rep, semidirect_product)
from .yang_baxter import (TwoTensor, check_relative_rb, cybe_rb_equivalence,
                          is_cybe_solution, lift_rb_to_rmatrix, symplectic_check)

__all__ = ["Check", "VerificationReport", "run_suite", "SUITES", "UnknownSuite"]


class UnknownSuite(KeyError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    passed: bool
    residual: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "passed": self.passed,
                "residual": self.residual}


@dataclass
class VerificationReport:
    subject: str
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def as_dict(self, timing: bool = False) -> dict:
        out = {"subject": self.subject, "suite": self.suite,
               "verdict": "pass" if self.passed else "fail",
               "checks": [c.as_dict() for c in self.checks]}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), indent=1, sort_keys=True)

    def to_text(self, timing: bool = False) -> str:
        lines = [f"{self.subject} [{self.suite}]: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = ""
            if not c.passed and c.residual.get("nonzero"):
                extra = f"  ({c.residual['nonzero']} nonzero residual entries)"
            lines.append(f"  {mark} {c.name} -- {c.anchor}{extra}")
        if timing:
            lines.append(f"  time {self.seconds:.3f}s")
        return "\n".join(lines)


def _from_axioms(report: AxiomReport, anchor: str, prefix: str = "") -> list[Check]:
    """One Check per identity; consequences are listed but only as named."""
    out = []
    for r in report.identities:
        name = prefix + r.name + (" (consequence)" if r.consequence else "")
        out.append(Check(name, anchor, r.passed, r.summary()))
    return out


def _flag(name: str, anchor: str, ok: bool, detail: dict | None = None) -> Check:
    return Check(name, anchor, bool(ok), detail or {})


# --------------------------------------------------------------------------
# suites


def _ly_axioms(alg: LYAlgebra) -> list[Check]:
    return _from_axioms(check_ly_axioms(alg), "Lie-Yamaguti algebra axioms")


def _adjoint(alg: LYAlgebra) -> list[Check]:
    return (_from_axioms(check_representation(adjoint_rep(alg)), "adjoint representation", "adjoint:")
            + _from_axioms(check_representation(coadjoint_rep(alg)), "coadjoint representation",
                           "coadjoint:"))


def _representation(rep: Representation) -> list[Check]:
    report = check_representation(rep)
    sd = check_ly_axioms(semidirect_product(rep.base, rep))
    return _from_axioms(report, "representation axioms") + [
        _flag("semidirect_product_agrees", "representation iff semidirect product is LY",
              report.passed == sd.passed, {"representation": report.passed, "semidirect": sd.passed})]


def _cybe(r: TwoTensor) -> list[Check]:
    res = is_cybe_solution(r)
    checks = [Check("binary_equation", "classical Yang-Baxter equation, [r,r] = 0",
                    res.binary.is_zero(), IdentityResult("", res.binary).summary()),
              Check("ternary_equation", "classical Yang-Baxter equation, [[r,r,r]] = 0",
                    res.ternary.is_zero(), IdentityResult("", res.ternary).summary())]
    if r.is_skew():
        ag = cybe_rb_equivalence(r)
        checks.append(_flag("rota_baxter_agrees", "CYBE iff r# is relative Rota-Baxter (coadjoint)",
                            ag.agree, ag.as_dict()))
        if r.is_nondegenerate():
            sym = symplectic_check(r)
            checks.append(_flag("symplectic_agrees", "CYBE iff the induced form is symplectic",
                                sym.passed == bool(res), {"symplectic": sym.passed}))
    return checks


def _rota_baxter(op: Operator) -> list[Check]:
    return _from_axioms(check_relative_rb(op.T, op.rep), "relative Rota-Baxter operator")


def _lift(op: Operator) -> list[Check]:
    rb = check_relative_rb(op.T, op.rep).passed
    r = lift_rb_to_rmatrix(op.T, op.rep)
    cy = bool(is_cybe_solution(r))
    return [_flag("lift_skew", "lifted tensor is skew", r.is_skew()),
            _flag("lift_agrees", "T relative RB iff the lifted tensor solves the CYBE",
                  rb == cy, {"rota_baxter": rb, "cybe": cy})]


def _coalgebra(c: Cobracket) -> list[Check]:
    return _from_axioms(dual_structure(c)[1], "dual brackets form a Lie-Yamaguti algebra", "dual:")


def _double_construction(c: Cobracket) -> list[Check]:
    return _from_axioms(check_double_construction(c), "double construction bialgebra")


def _matched_pair_checks(mp: MatchedPairData) -> list[Check]:
    rep = check_matched_pair(mp)
    return _from_axioms(rep.identities, "matched pair identities") + [
        _flag("bowtie_agrees", "matched pair iff the bowtie brackets are LY", rep.agree,
              {"identities": rep.identities.passed, "bowtie": rep.bowtie.passed})]


def _coadjoint_pair(c: Cobracket) -> list[Check]:
    return _matched_pair_checks(coadjoint_matched_pair(c))


def _manin(c: Cobracket) -> list[Check]:
    mt = standard_manin_triple(c)
    return _from_axioms(check_manin_triple(mt.algebra, mt.form, mt.first, mt.second),
                        "standard Manin triple")


def _equivalence(c: Cobracket) -> list[Check]:
    e = equivalence_report(c)
    v = e.verdicts
    return [_flag(k, "main equivalence: " + k.replace("_", " "), ok) for k, ok in v.items()] + [
        _flag("three_way_agreement", "the three conditions coincide", e.consistent, v)]


def _local(c: Cobracket) -> list[Check]:
    # without explicit splits use delta/2 + delta/2 and omega/2 + omega/2 + 0
    if c.splits is None:
        c = local_from_double(c, Fraction(1, 2), Fraction(1, 2), 0)
        return _from_axioms(check_local_cocycle(c), "local cocycle bialgebra, half splits")
    return _from_axioms(check_local_cocycle(c), "local cocycle bialgebra")


def _pre_ly(A: PreLY) -> list[Check]:
    report = check_pre_ly_axioms(A)
    checks = _from_axioms(report, "pre-Lie-Yamaguti axioms")
    if not report.passed:
        return checks
    checks += _from_axioms(check_ly_axioms(sub_adjacent(A)), "sub-adjacent algebra is LY", "sub-adjacent:")
    rep = ad_r_representation(A)
    checks += _from_axioms(check_representation(rep), "(Ad, R) representation", "ad_r:")
    checks += _from_axioms(check_relative_rb(identity(A.dim), rep), "identity is relative RB",
                           "identity_rb:")
    r = canonical_rmatrix(A)
    checks.append(_flag("canonical_r_cybe", "canonical r solves the CYBE", bool(is_cybe_solution(r))))
    checks.append(_flag("canonical_r_skew_nondegenerate", "canonical r is skew and nondegenerate",
                        r.is_skew() and r.is_nondegenerate()))
    return checks


SUITES: dict[type, dict[str, Callable]] = {
    LYAlgebra: {"ly-axioms": _ly_axioms, "adjoint": _adjoint},
    Representation: {"representation": _representation},
    TwoTensor: {"cybe": _cybe},
    Operator: {"rota-baxter": _rota_baxter, "lift": _lift},
    Cobracket: {"double-construction": _double_construction, "coalgebra": _coalgebra,
                "matched-pair": _coadjoint_pair, "manin": _manin, "equivalence": _equivalence,
                "local-cocycle": _local},
    PreLY: {"pre-ly": _pre_ly},
    MatchedPairData: {"matched-pair": _matched_pair_checks},
}


def suites_for(obj) -> dict[str, Callable]:
    for kind, table in SUITES.items():
        if isinstance(obj, kind):
            return table
    raise UnknownSuite(f"no suites for {type(obj).__name__}")


def default_suite(obj) -> str:
    return next(iter(suites_for(obj)))


def _subject(obj) -> str:
    for attr in ("name",):
        if getattr(obj, attr, ""):
            return getattr(obj, attr)
    inner = getattr(obj, "alg", None) or getattr(obj, "base", None)
    label = type(obj).__name__
    if inner is not None and inner.name:
        return f"{label} on {inner.name}"
    return label


def run_suite(obj, suite: str | None = None, subject: str | None = None) -> VerificationReport:
    table = suites_for(obj)
    suite = suite or default_suite(obj)
    if suite not in table:
        raise UnknownSuite(f"suite {suite!r} does not apply to {type(obj).__name__}; "
                           f"choose from {sorted(table)}")
    t0 = time.perf_counter()
    checks = table[suite](obj)
    return VerificationReport(subject or _subject(obj), suite, checks, time.perf_counter() - t0)
