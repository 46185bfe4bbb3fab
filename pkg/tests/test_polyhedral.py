from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from valmat.errors import ConditionFailed, NotAMatroid, NotSpannable
from valmat.gallery import TWO_PRIMES, TWO_PRIMES_VECTORS, exceptional_example, single_loop
from valmat.matroid import MatroidV, contract, delete, direct_sum_matroid, dual, is_essential, is_spannable
from valmat.enumerate import enumerate_matroids
from valmat.polyhedral import (MatroidOverZ, QPolyhedron, build_P, build_P_multi, build_RP,
                               check_edge_directions, corank_subdivision_formula,
                               corank_subdivision_geometric, faces_by_recession, lp_feasible,
                               lp_optimize, matroid_from_polyhedron, poly_contract, poly_delete,
                               poly_dual, poly_sum, project_prime, rp_feasible,
                               spanning_polytopes, spanning_polytopes_direct)
from valmat.polyhedral.lifted import t_from_P
from valmat.polyhedral.subdivision import fano, k4, uniform
from valmat.valgroup import INF

SMALL = list(enumerate_matroids(2, "int", 2, 2))
tables = st.sampled_from(SMALL)


def test_lp_examples():
    res = lp_optimize([1, 1], A_ub=[[1, 2], [3, 1]], b_ub=[4, 6])
    assert res.ok and res.value == Fraction(14, 5)
    assert res.x == [Fraction(8, 5), Fraction(6, 5)]
    assert lp_feasible(A_ub=[[1], [-1]], b_ub=[1, -2], nvar=1).status == "infeasible"
    assert lp_optimize([1], A_ub=[[-1]], b_ub=[0]).status == "unbounded"


def test_single_loop_polyhedron():
    P = build_P(single_loop())
    assert P.vertices == ((0, 0, 0), (1, 0, 0))
    assert P.rays == ((0, 0, 1), (0, 1, 0))


def test_exceptional_polyhedron():
    P = build_P(exceptional_example())
    assert (1, 1, 0, 1) in P.vertices
    assert len(P.vertices) == 8
    assert t_from_P(P, 2, 1, 0) == 3
    assert t_from_P(P, 2, 0, 0) is INF


def test_square_edges_and_redundant_points():
    Q = QPolyhedron.from_generators(2, [[0, 0], [1, 0], [0, 1], [1, 1], [Fraction(1, 2), Fraction(1, 2)]])
    assert Q.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    bounded, unbounded = Q.edges()
    assert len(bounded) == 4 and unbounded == []


def test_build_P_rejects_non_matroid():
    with pytest.raises(NotAMatroid):
        build_P(MatroidV.from_sets({(): [1], (1,): [2]}, n=1))


def test_two_primes_direction_violations():
    MZ = MatroidOverZ.from_vectors(2, TWO_PRIMES_VECTORS, TWO_PRIMES)
    P = build_P_multi(MZ)
    bad = check_edge_directions(P, 4)
    assert len(bad) == 4
    edges = {(v, w) for v, w, _ in bad}
    assert ((0, 1, 1, 0, 0, 0, 0), (1, 0, 0, 1, 0, 0, 0)) in edges
    for k in range(2):
        assert check_edge_directions(project_prime(P, 4, k), 4) == []


def test_recognition_failures():
    with pytest.raises(ConditionFailed) as exc:
        matroid_from_polyhedron(QPolyhedron.from_generators(3, [[0, 0, 0]]), 1)
    assert exc.value.condition == "i"
    bad = QPolyhedron.from_generators(3, [[0, 0, Fraction(1, 2)], [1, 0, 0]], [[0, 1, 0], [0, 0, 1]])
    with pytest.raises(ConditionFailed) as exc:
        matroid_from_polyhedron(bad, 1)
    assert exc.value.condition == "iii"


def test_subdivisions():
    assert len(corank_subdivision_formula(uniform(2, 4))) == 2
    assert len(corank_subdivision_formula(k4())) == 6
    for N in (uniform(2, 4), k4(), fano()):
        assert corank_subdivision_formula(N) == corank_subdivision_geometric(N)


def test_rp_system():
    M = MatroidV.from_sets({(): [2, 2], (1,): [2], (2,): [2], (1, 2): []}, n=2)
    sy = build_RP(M)
    assert sy["thresholds"] == [1, 2, 3, 4]
    assert len(sy["rows"]) == 24
    assert rp_feasible(sy)
    with pytest.raises(NotSpannable):
        build_RP(exceptional_example())


def test_faces_of_example():
    rep = faces_by_recession(exceptional_example())
    assert {k: len(v) for k, v in rep.faces.items()} == {"a": 9, "b": 9, "c": 11, "d": 43}
    assert rep.class_c_ok and rep.class_d_ok


@given(tables)
def test_roundtrip_through_polyhedron(M):
    P = build_P(M)
    assert matroid_from_polyhedron(P, M.n) == M
    assert check_edge_directions(P, M.n) == []
    assert QPolyhedron.from_json(P.to_json()) == P


@given(tables)
def test_operations_commute_with_P(M):
    P = build_P(M)
    assert poly_delete(P, 0) == build_P(delete(M, 1))
    assert poly_contract(P, 0) == build_P(contract(M, 1))
    if is_essential(M):
        assert poly_dual(P, M.n, M.generic_rank) == build_P(dual(M))


@given(tables, tables)
def test_sum_commutes_with_P(M, N):
    assert poly_sum(build_P(M), M.n, build_P(N), N.n) == build_P(direct_sum_matroid(M, N))


@given(tables)
def test_spanning_polytopes_agree(M):
    assert spanning_polytopes(M) == spanning_polytopes_direct(M)


@given(tables)
def test_faces_classes(M):
    rep = faces_by_recession(M)
    assert rep.class_c_ok and rep.class_d_ok


@given(tables)
def test_rp_feasible_for_spannable(M):
    if is_spannable(M):
        assert rp_feasible(build_RP(M))
