"""Exact verification of Lie-Yamaguti algebras and their bialgebra theory."""

from .algebra import LYAlgebra, abelian, check_ly_axioms, from_lie_algebra
from .bialgebra import (Cobracket, MatchedPairData, bowtie_product, check_double_construction,
                        check_local_cocycle, check_manin_triple, check_matched_pair,
                        dual_structure, equivalence_report, local_from_double,
                        slot_representation, standard_manin_triple)
from .checks import AxiomReport, IdentityResult
from .cohomology import Cochain, coboundary, is_derivation, is_one_cocycle
from .io import load, parse_input
from .linalg import Tensor
from .pre_ly import PreLY, check_pre_ly_axioms, sub_adjacent
from .report import VerificationReport, run_suite
from .representation import (Representation, adjoint_rep, check_representation, coadjoint_rep,
                             dual_rep, semidirect_product)
from .search import search_rmatrix
from .yang_baxter import (TwoTensor, check_relative_rb, cybe_rb_equivalence, is_cybe_solution,
                          lift_rb_to_rmatrix)

__version__ = "0.1.0"

__all__ = [
    "LYAlgebra",
    "abelian",
    "check_ly_axioms",
    "from_lie_algebra",
    "Cobracket",
    "MatchedPairData",
    "bowtie_product",
    "check_double_construction",
    "check_local_cocycle",
    "check_manin_triple",
    "check_matched_pair",
    "dual_structure",
    "equivalence_report",
    "local_from_double",
    "slot_representation",
    "standard_manin_triple",
    "AxiomReport",
    "IdentityResult",
    "Cochain",
    "coboundary",
    "is_derivation",
    "is_one_cocycle",
    "load",
    "parse_input",
    "Tensor",
    "PreLY",
    "check_pre_ly_axioms",
    "sub_adjacent",
    "VerificationReport",
    "run_suite",
    "Representation",
    "adjoint_rep",
    "check_representation",
    "coadjoint_rep",
    "dual_rep",
    "semidirect_product",
    "search_rmatrix",
    "TwoTensor",
    "check_relative_rb",
    "cybe_rb_equivalence",
    "is_cybe_solution",
    "lift_rb_to_rmatrix",
]
