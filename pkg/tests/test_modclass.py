from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from valmat.errors import NotValidTSequence, SizeBound
from valmat.modclass import (ModuleClass, d_invariant, d_leq, direct_sum, from_t_sequence,
                             generic_quotient, oracle_t_finite, t_invariant, t_sequence)
from valmat.valgroup import INF, ext_sub

lengths = st.lists(st.one_of(st.integers(1, 5), st.just(INF)), max_size=4)
torsion = st.lists(st.integers(1, 3), max_size=3)


def test_canonical_form():
    N = ModuleClass([1, INF, 0, 2])
    assert N.lengths == (INF, 2, 1)
    assert N.free_rank == 1 and N.torsion_count == 2
    with pytest.raises(ValueError):
        ModuleClass([-1])


def test_t_invariant_examples():
    N = ModuleClass([INF, 2])
    assert [t_invariant(N, i) for i in range(3)] == [INF, 2, 0]
    assert t_invariant(ModuleClass(), 4) == 0
    assert [t_invariant(ModuleClass([2, 1]), i) for i in range(3)] == [3, 1, 0]


def test_t_sequence_and_inverse():
    assert t_sequence(ModuleClass([INF, 2])) == (INF, 2, 0)
    assert t_sequence(ModuleClass()) == (0,)
    assert t_sequence(ModuleClass([2, 1])) == (3, 1, 0)
    assert from_t_sequence((INF, 2, 0)) == ModuleClass([INF, 2])
    assert from_t_sequence((0,)) == ModuleClass()
    assert from_t_sequence((3, 1, 0)) == ModuleClass([2, 1])
    with pytest.raises(NotValidTSequence):
        from_t_sequence((3, 2, 0))


def test_d_invariants():
    N = ModuleClass([2, 1])
    assert [d_invariant(N, l) for l in (1, 2, 3)] == [2, 1, 0]
    assert d_invariant(ModuleClass(), 1) == 0
    assert d_invariant(ModuleClass([INF, 2]), 5) == 1
    assert d_leq(ModuleClass([INF, 2]), 1) == 2
    assert d_leq(ModuleClass(), 7) == 0
    assert d_leq(N, 2) == 3


def test_generic_quotient_and_sum():
    assert generic_quotient(ModuleClass([INF, 2])) == ModuleClass([2])
    assert generic_quotient(ModuleClass()) == ModuleClass()
    assert generic_quotient(ModuleClass([2, 1])) == ModuleClass([1])
    assert direct_sum(ModuleClass([2]), ModuleClass([1])) == ModuleClass([2, 1])
    assert direct_sum(ModuleClass([INF]), ModuleClass([INF])) == ModuleClass([INF, INF])
    N = ModuleClass([3, Fraction(1, 2)])
    assert direct_sum(N, ModuleClass()) == N


def test_oracle_examples():
    assert oracle_t_finite(2, (2, 1), 1) == 1
    assert oracle_t_finite(2, (), 3) == 0
    assert oracle_t_finite(3, (1, 1), 1) == 1
    with pytest.raises(SizeBound):
        oracle_t_finite(2, (10, 10, 10), 1)


@given(torsion, st.sampled_from([2, 3]), st.integers(0, 3))
def test_t_invariant_matches_oracle(exps, p, i):
    assume(p ** sum(exps) <= 32)
    assert t_invariant(ModuleClass(exps), i) == oracle_t_finite(p, exps, i)


@given(lengths)
def test_roundtrip(ls):
    N = ModuleClass(ls)
    assert from_t_sequence(t_sequence(N)) == N


@given(lengths, st.integers(0, 4), st.integers(1, 6))
def test_t_d_dictionary(ls, i, ell):
    N = ModuleClass(ls)
    diff = ext_sub(t_invariant(N, i), t_invariant(N, i + 1))
    assert (diff >= ell) == (d_invariant(N, ell) > i)


@given(lengths)
def test_t0_and_d_monotone(ls):
    N = ModuleClass(ls)
    diffs = [ext_sub(t_invariant(N, i), t_invariant(N, i + 1)) for i in range(6)]
    assert all(a >= b for a, b in zip(diffs, diffs[1:]))
    ds = [d_invariant(N, l) for l in range(1, 8)]
    assert all(a >= b for a, b in zip(ds, ds[1:]))
    assert ds[0] <= N.summand_count


@given(lengths, lengths, st.integers(0, 5))
def test_direct_sum_is_min_convolution(a, b, i):
    N, P = ModuleClass(a), ModuleClass(b)
    conv = min(t_invariant(N, j) + t_invariant(P, i - j) for j in range(i + 1))
    assert t_invariant(direct_sum(N, P), i) == conv


@given(lengths)
def test_generic_quotients_exhaust(ls):
    N = ModuleClass(ls)
    for _ in range(N.free_rank + N.torsion_count):
        N = generic_quotient(N)
    assert N.is_zero()
