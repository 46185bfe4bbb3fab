from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from valmat.axioms import verify_t_axioms
from valmat.errors import FormatError
from valmat.gallery import TWO_PRIMES, TWO_PRIMES_VECTORS
from valmat.matroid import contract, delete
from valmat.modclass import ModuleClass
from valmat.oracles import smith_realize_table, smith_valuations
from valmat.realize import (PUISEUX, PuiseuxPoly, ValuedMatrix, minor_valuations,
                            module_from_mus, p_local, random_realizable, realize,
                            realize_multi, vp)
from valmat.valgroup import INF

seeds = st.integers(0, 10 ** 6)


def test_p_adic_valuation():
    assert vp(Fraction(12, 5), 2) == 2
    assert vp(Fraction(5, 4), 2) == -2
    assert vp(Fraction(0), 3) is INF


def test_puiseux_arithmetic():
    a = PuiseuxPoly([(1, Fraction(1, 2)), (2, 0)])
    b = PuiseuxPoly([(-2, 0), (3, 1)])
    assert (a + b).val() == Fraction(1, 2)
    assert (a * b).val() == 0
    assert (a - a).is_zero()
    assert PuiseuxPoly().val() is INF
    assert a * b == b * a
    assert PuiseuxPoly.from_json(a.to_json()) == a


def test_minor_valuations_example():
    X = ValuedMatrix(p_local(2), 2, [], [[1, 0], [0, 2]])
    assert minor_valuations(X, (1, 2)) == [0, 0, 1]
    assert module_from_mus([0, 0, 1], 2) == ModuleClass([1])
    M = realize(X)
    assert M.module(()) == ModuleClass([INF, INF])
    assert M.module((2,)) == ModuleClass([INF, 1])
    assert M.module((1, 2)) == ModuleClass([1])


def test_puiseux_realisation_has_rational_lengths():
    t = PuiseuxPoly.monomial
    X = ValuedMatrix(PUISEUX, 2, [], [[t(1, Fraction(1, 2)), 0], [0, t(1, Fraction(1, 3))]])
    M = realize(X)
    assert M.flavor == "rat"
    assert M.module((1, 2)) == ModuleClass([Fraction(1, 2), Fraction(1, 3)])
    assert verify_t_axioms(M).passed


def test_two_primes_locals():
    locs, relevant = realize_multi(2, TWO_PRIMES_VECTORS, TWO_PRIMES)
    assert relevant == [2, 3]
    torsion = {p: [M.set_of(A) for A in range(16) if M.modules[A].torsion_count]
               for p, M in locs.items()}
    assert torsion == {2: [(3, 4)], 3: [(2, 4)]}


def test_bad_entries():
    with pytest.raises(FormatError):
        ValuedMatrix(p_local(2), 1, [], [["1/2"]])
    with pytest.raises(FormatError):
        ValuedMatrix(p_local(3), 2, [], [[1]])


def test_random_is_deterministic():
    a = random_realizable(2, 3, seed=7)
    b = random_realizable(2, 3, seed=7)
    assert a.elements == b.elements


@given(seeds, st.sampled_from([2, 3]), st.integers(0, 1))
def test_minors_match_smith_oracle(seed, p, nrel):
    X = random_realizable(2, 3, seed, p_local(p), n_relations=nrel)
    assert list(realize(X).modules) == smith_realize_table(X)


@given(seeds)
def test_smith_diagonal_of_identity_multiple(seed):
    k = seed % 4
    assert smith_valuations(2, [[2 ** k, 0], [0, 1]]) == [0, k]


@given(seeds, st.sampled_from([p_local(2), p_local(3), PUISEUX]))
def test_realised_tables_are_matroids(seed, ring):
    X = random_realizable(2, 3, seed, ring)
    assert verify_t_axioms(realize(X)).passed


@given(seeds, st.integers(0, 2))
def test_minors_commute_with_realisation(seed, index):
    X = random_realizable(2, 3, seed, p_local(2), n_relations=1)
    M = realize(X)
    label = X.labels[index]
    assert realize(X.drop_element(index)) == delete(M, label)
    assert realize(X.contract_element(index)) == contract(M, label)
