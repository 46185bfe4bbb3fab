from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from valmat.errors import EmptyList, FiniteMinusInfinity, FormatError
from valmat.valgroup import INF, ext, ext_add, ext_sub, fmt, min_attained_twice

finite = st.fractions(min_value=-50, max_value=50, max_denominator=6)
value = st.one_of(finite, st.just(INF))


def test_addition_with_infinity():
    assert ext_add(INF, 3) is INF
    assert ext_add(0, 0) == 0
    assert ext_add(Fraction(3, 2), Fraction(1, 2)) == 2
    assert isinstance(ext_add(Fraction(3, 2), Fraction(1, 2)), int)


def test_subtraction_conventions():
    assert ext_sub(INF, INF) is INF
    assert ext_sub(5, 5) == 0
    with pytest.raises(FiniteMinusInfinity):
        ext_sub(2, INF)


def test_min_attained_twice():
    assert min_attained_twice([2, 2, 3])
    assert not min_attained_twice([0, 1, 2])
    assert min_attained_twice([INF, INF, INF])
    with pytest.raises(EmptyList):
        min_attained_twice([])


def test_tokens_roundtrip():
    assert ext("inf") is INF
    assert ext("3/6") == Fraction(1, 2)
    assert fmt(Fraction(4, 2)) == 2
    assert fmt(Fraction(1, 3)) == "1/3"
    assert fmt(INF) == "inf"
    with pytest.raises(FormatError):
        ext("three")
    with pytest.raises(FormatError):
        ext(0.5)


@given(value, value, value)
def test_addition_commutative_associative(a, b, c):
    assert ext_add(a, b) == ext_add(b, a)
    assert ext_add(ext_add(a, b), c) == ext_add(a, ext_add(b, c))


@given(value, finite)
def test_sub_undoes_add(a, b):
    assert ext_sub(ext_add(a, b), b) == a


@given(st.lists(value, min_size=1, max_size=6), finite, st.randoms())
def test_vanishing_invariances(vals, c, rnd):
    base = min_attained_twice(vals)
    shuffled = list(vals)
    rnd.shuffle(shuffled)
    assert min_attained_twice(shuffled) == base
    assert min_attained_twice([ext_add(v, c) for v in vals]) == base
