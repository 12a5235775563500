"""
Numerical semigroups N a + N c, the gap symmetries and monomial curves
"""

from math import gcd

import pytest
from hypothesis import given, strategies as st

from src.core.errors import MalformedInputError, PreconditionError
from src.core.semigroup import (
    MonomialCurve,
    NumericalSemigroup,
    check_semigroup_lemma,
    monomial_cflat_nonglobal_dim,
    monomial_section,
    semigroup_member,
)

COPRIME_PAIRS = [(a, c) for a in range(1, 30) for c in range(1, 30) if gcd(a, c) == 1 and a * c <= 200]

Coprime = st.tuples(st.integers(1, 25), st.integers(1, 25)).filter(lambda ac: gcd(*ac) == 1)


def test_gaps_of_three_and_five():
    E = NumericalSemigroup(3, 5)
    assert E.frobenius() == 7
    assert E.gaps() == [1, 2, 4, 7]
    assert 8 in E
    assert 7 not in E
    assert not E.member(-1)


def test_semigroup_rejects_bad_generators():
    with pytest.raises(PreconditionError):
        NumericalSemigroup(4, 6)
    with pytest.raises(MalformedInputError):
        NumericalSemigroup(0, 3)
    with pytest.raises(MalformedInputError):
        semigroup_member(NumericalSemigroup(2, 3), -1)


@given(Coprime)
def test_half_of_the_numbers_below_frobenius_are_gaps(ac):
    a, c = ac
    E = NumericalSemigroup(a, c)
    assert 2 * len(E.gaps()) == (a - 1) * (c - 1)
    assert all(not E.member(g) for g in E.gaps())


@pytest.mark.parametrize("a, c", COPRIME_PAIRS)
def test_semigroup_lemma_holds(a, c):
    report = check_semigroup_lemma(a, c)
    assert report.passed, report.counterexample


@pytest.mark.parametrize("a, c", [(2, 3), (3, 5), (4, 7), (5, 6)])
def test_semigroup_lemma_first_part_fails_at_zero(a, c):
    report = check_semigroup_lemma(a, c, include_zero=True)
    assert not report.passed
    assert report.counterexample == ("a", 0)


@pytest.mark.parametrize("a, c", COPRIME_PAIRS)
def test_nonglobal_cflat_directions_count_the_gaps(a, c):
    assert monomial_cflat_nonglobal_dim(a, c) == (a - 1) * (c - 1) // 2


def test_monomial_section():
    assert monomial_section(3, 5, 8) == (1, 1)
    assert monomial_section(3, 5, -1) == (-2, 3)
    assert monomial_section(2, 1, 5) == (5, 0)


@given(Coprime, st.integers(-40, 40))
def test_monomial_section_reassembles_the_exponent(ac, m):
    a, c = ac
    alpha, beta = monomial_section(a, c, m)
    assert alpha * c + beta * a == m
    assert 0 <= beta < c


def test_monomial_curve():
    curve = MonomialCurve(2, 3)
    assert not curve.is_smooth()
    assert MonomialCurve(1, 4).is_smooth()
    assert curve.regular_exponent(5)
    assert not curve.regular_exponent(1)
    assert curve.section_exponents(5) == (1, 1)
    with pytest.raises(PreconditionError):
        MonomialCurve(2, 4)
