"""Residual-based identity reports shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Tensor, format_rational


@dataclass(frozen=True)
class IdentityResult:
    """One identity evaluated on all basis tuples.

    ``residual`` is the left-minus-right coefficient tensor; the identity
    holds exactly when it vanishes.  ``consequence`` marks identities that
    must follow from the others (reported, but not part of the verdict).
    """

    name: str
    residual: Tensor
    consequence: bool = False

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    def summary(self, limit: int = 5) -> dict:
        nz = self.residual.nonzero()
        return {
            "nonzero": len(nz),
            "entries": [[list(i), format_rational(v)] for i, v in nz[:limit]],
        }


@dataclass
class AxiomReport:
    subject: str
    identities: list[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.identities if not r.consequence)

    @property
    def consistent(self) -> bool:
        """False when the axioms hold but a consequence fails (an internal bug)."""
        if not self.passed:
            return True
        return all(r.passed for r in self.identities if r.consequence)

    def __getitem__(self, name: str) -> IdentityResult:
        for r in self.identities:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[str]:
        return [r.name for r in self.identities if not r.passed]

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        status = "pass" if self.passed else f"fail {self.failures()}"
        return f"AxiomReport({self.subject!r}, {status})"


def scalar(t: Tensor) -> Fraction:
    return Fraction(int(t.num), t.den)
