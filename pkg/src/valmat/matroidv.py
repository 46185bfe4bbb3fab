"""Matroids over a valuation ring in one namespace.

The implementation is split over :mod:`valmat.matroid` (the table and its
operations), :mod:`valmat.axioms` (axiom checkers) and
:mod:`valmat.spannable` (reconstruction and exceptional pairs).
"""
from .axioms import (D_STATEMENTS, AxiomReport, Violation, check_generalised_exchange,
                     critical_thresholds, generalised_exchange_failures, verify_all_D,
                     verify_D_statement, verify_d_axioms, verify_reduced_system,
                     verify_t_axioms)
from .enumerate import enumerate_matroids, module_classes
from .matroid import (MatroidV, add_loop, contract, delete, direct_sum_matroid, dual,
                      from_t_table, generic_extension, is_bispannable, is_cospannable,
                      is_essential, is_spannable, t)
from .spannable import (ExceptionalPair, check_spannable_recursion, exceptional_pairs,
                        exceptionality, reconstruct_bispannable, reconstruct_bounded,
                        reconstruct_spannable)

__all__ = [
    "add_loop", "AxiomReport", "check_generalised_exchange", "check_spannable_recursion",
    "contract", "critical_thresholds", "D_STATEMENTS", "delete", "direct_sum_matroid", "dual",
    "enumerate_matroids", "exceptional_pairs", "exceptionality", "ExceptionalPair", "from_t_table",
    "generalised_exchange_failures", "generic_extension", "is_bispannable", "is_cospannable",
    "is_essential", "is_spannable", "MatroidV", "module_classes", "reconstruct_bispannable",
    "reconstruct_bounded", "reconstruct_spannable", "t", "verify_all_D", "verify_d_axioms",
    "verify_D_statement", "verify_reduced_system", "verify_t_axioms", "Violation",
]
