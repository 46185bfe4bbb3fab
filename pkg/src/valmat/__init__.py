"""Matroids over valuation rings: axioms, realisations, polyhedra and tropical data."""
from .axioms import (AxiomReport, Violation, verify_all_D, verify_D_statement, verify_d_axioms,
                     verify_reduced_system, verify_t_axioms)
from .matroid import (MatroidV, add_loop, contract, delete, direct_sum_matroid, dual, from_t_table,
                      generic_extension, is_bispannable, is_cospannable, is_essential, is_spannable)
from .modclass import ModuleClass, d_invariant, d_leq, t_invariant
from .valgroup import INF, ext

__all__ = [
    "add_loop", "AxiomReport", "contract", "d_invariant", "d_leq", "delete", "direct_sum_matroid",
    "dual", "ext", "from_t_table", "generic_extension", "INF", "is_bispannable", "is_cospannable",
    "is_essential", "is_spannable", "MatroidV", "ModuleClass", "t_invariant", "verify_all_D",
    "verify_d_axioms", "verify_D_statement", "verify_reduced_system", "verify_t_axioms",
    "Violation",
]

__version__ = "0.1.0"
