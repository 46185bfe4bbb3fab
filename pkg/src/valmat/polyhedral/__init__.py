"""Exact polyhedra, lifted matroid polyhedra and subdivisions."""
from .lp import LPResult, lp_feasible, lp_optimize, lp_solve
from .polyhedron import QPolyhedron, minkowski_sum
from .lifted import (MatroidOverZ, build_P, build_P_multi, build_RP, check_edge_directions,
                     faces_by_recession, matroid_from_polyhedron, poly_contract, poly_delete,
                     poly_dual, poly_sum, project_prime, rp_feasible, spanning_polytopes,
                     spanning_polytopes_direct)
from .subdivision import (ClassicalMatroid, corank_subdivision_facets, corank_subdivision_formula,
                          corank_subdivision_geometric, regular_subdivision)

__all__ = [
    "build_P", "build_P_multi", "build_RP", "check_edge_directions", "ClassicalMatroid",
    "corank_subdivision_facets", "corank_subdivision_formula", "corank_subdivision_geometric",
    "faces_by_recession", "lp_feasible", "lp_optimize", "lp_solve", "LPResult",
    "matroid_from_polyhedron", "MatroidOverZ", "minkowski_sum", "poly_contract", "poly_delete",
    "poly_dual", "poly_sum", "project_prime", "QPolyhedron", "regular_subdivision", "rp_feasible",
    "spanning_polytopes", "spanning_polytopes_direct",
]
