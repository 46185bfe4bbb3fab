import pytest
from hypothesis import given, strategies as st

from valmat.enumerate import enumerate_matroids
from valmat.errors import AllInfinite, BadProfile, NotNormalized, NotPluecker, RankMismatch
from valmat.gallery import TWO_PRIMES, TWO_PRIMES_VECTORS, exceptional_example
from valmat.matroid import is_essential
from valmat.realize import p_local, random_realizable, realize, realize_multi
from valmat.tropical import (TPluecker, all_profiles, check_flag, check_pluecker_full,
                             check_three_term, check_W, class_parameters, extract_flag,
                             extract_t_vector, fano_vector, fm_profile, lifted_formula,
                             lifted_vector, section, stable_intersection, stable_sum,
                             vector_from_values, xi_blocks, xi_embed)
from valmat.valgroup import INF

SMALL = [M for M in enumerate_matroids(2, "int", 2, 2) if is_essential(M)]
seeds = st.integers(0, 10 ** 6)


def test_t_vectors_of_example():
    E = exceptional_example()
    assert extract_t_vector(E, 1, 0).values() == [3, 3]
    assert extract_t_vector(E, 0, 1).values() == [2]
    assert extract_t_vector(E, 2, 0).values() == [1]
    assert extract_t_vector(E, 0, 1).note == "boundary"
    with pytest.raises(AllInfinite):
        extract_t_vector(E, 0, 0)


def test_flags_of_example():
    E = exceptional_example()
    assert fm_profile(E) == (1, 0, 0)
    assert check_flag(extract_flag(E, (1, 0, 0))).passed
    assert all_profiles(2, 1, 2) == [(1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 0),
                                     (2, 1, 1), (2, 2, 1), (2, 2, 2)]
    with pytest.raises(BadProfile):
        extract_flag(E, (0, 0, 0))


def test_two_primes_vector():
    locs, _ = realize_multi(2, TWO_PRIMES_VECTORS, TWO_PRIMES)
    assert extract_t_vector(locs[2], 2, 0).values() == [0, 0, 0, 0, 0, 1]
    assert extract_t_vector(locs[3], 2, 0).values() == [0, 0, 0, 0, 1, 0]


def test_three_term_relations():
    assert check_three_term(vector_from_values(4, 2, [0, 0, 1, 0, 0, 0])).passed
    assert not check_three_term(vector_from_values(4, 2, [0, 1, 1, 1, 1, 0])).passed
    assert not check_pluecker_full(vector_from_values(4, 2, [0, 1, 1, 1, 1, 0])).passed


def test_stable_operations_on_uniform():
    u = TPluecker.constant(4, 2)
    assert stable_sum(u, TPluecker.constant(4, 1)).values() == [0] * 4
    assert stable_intersection(u, TPluecker.constant(4, 3)).values() == [0] * 4
    with pytest.raises(RankMismatch):
        stable_sum(u, TPluecker.constant(3, 1))


def test_xi_embed_of_example():
    E = exceptional_example()
    assert class_parameters(E) == (1, 1, 1)
    q = xi_embed(E, 1, 2, 1, 1)
    assert (q.n, q.r) == (6, 3)
    assert check_pluecker_full(q).passed
    assert check_W(q, 2, *xi_blocks(2, 1, 1, 1)).passed


def test_check_W_negative_control():
    E = exceptional_example()
    q = xi_embed(E, 1, 2, 1, 1)
    G, Z = xi_blocks(2, 1, 1, 1)
    A = max(A for A in q.coords if q[A] is not INF)
    coords = dict(q.coords)
    coords[A] = q[A] + 5
    assert not check_W(TPluecker(6, 3, coords), 2, G, Z).passed


def test_section_recovers_two_primes_local():
    locs, _ = realize_multi(2, TWO_PRIMES_VECTORS, TWO_PRIMES)
    s = section(vector_from_values(4, 2, [0, 0, 0, 0, 0, 1]))
    assert s.matroid == locs[2]
    assert s.shift == 0


def test_section_guards():
    with pytest.raises(NotNormalized):
        section(vector_from_values(4, 2, [1, 1, 1, 1, 1, 2]))
    assert section(vector_from_values(4, 2, [1, 1, 1, 1, 1, 2]), auto_shift=True).shift == -1
    with pytest.raises(NotPluecker):
        section(vector_from_values(4, 2, [0, 1, 1, 1, 1, 0]))


def test_fano_vector():
    f = fano_vector()
    assert len(f.support()) == 28
    assert check_pluecker_full(f).passed


@given(seeds)
def test_realised_t_vectors_are_pluecker(seed):
    M = realize(random_realizable(2, 4, seed, p_local(2)))
    R = M.generic_rank
    for r in range(M.n + 1):
        for i in range(max(R - r, 0), 3):
            p = extract_t_vector(M, r, i)
            assert check_pluecker_full(p).passed


@given(st.sampled_from(SMALL), st.data())
def test_flags_of_small_tables(M, data):
    profiles = all_profiles(M.n, M.generic_rank, M.stab_bound + 1)
    prof = data.draw(st.sampled_from(profiles))
    assert check_flag(extract_flag(M, prof)).passed


@given(seeds)
def test_section_roundtrip(seed):
    M = realize(random_realizable(2, 4, seed, p_local(2), zero_prob=0.0))
    if M.generic_rank != 2:
        return
    p = extract_t_vector(M, 2, 0)
    s = section(p, auto_shift=True)
    assert extract_t_vector(s.matroid, 2, 0) == p.shift(s.shift)


@given(seeds)
def test_lifted_vector_matches_formula(seed):
    M = realize(random_realizable(2, 3, seed, p_local(3), zero_prob=0.0))
    if M.generic_rank != 2:
        return
    p = extract_t_vector(M, 2, 0).normalized()
    q = lifted_vector(p)
    G, _ = xi_blocks(p.n, p.r, 0, 0)
    for A, v in q.coords.items():
        assert v == lifted_formula(p, A, G)
