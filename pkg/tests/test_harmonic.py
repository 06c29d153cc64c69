from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powsum.bernoulli import poly_bernoulli, poly_bernoulli_sequence
from powsum.exact import DomainError
from powsum.harmonic import (
    harmonic_classical,
    harmonic_direct,
    harmonic_theorem1,
    polybernoulli_from_harmonic,
    reciprocal_power,
)

import oracles


def test_direct_examples():
    assert harmonic_direct(3, 1) == Fraction(11, 6)
    assert harmonic_direct(3, -2) == 14
    assert harmonic_direct(0, 5) == 0
    for n in (0, 1, 7, 30):
        assert harmonic_direct(n, 0) == n
    with pytest.raises(DomainError):
        harmonic_direct(-1, 1)


def test_direct_matches_oracle_summation():
    for n in range(25):
        for p in range(-4, 5):
            assert harmonic_direct(n, p) == oracles.harmonic_by_summation(n, p)


def test_values_are_integers_for_nonpositive_exponent():
    for p in range(-6, 1):
        for n in range(15):
            assert harmonic_direct(n, p).denominator == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 60), st.integers(-6, 6))
def test_monotone_growth_step(n, p):
    step = harmonic_direct(n + 1, p) - harmonic_direct(n, p)
    assert step == reciprocal_power(n + 1, p)


def test_reciprocal_power_requires_positive_base():
    assert reciprocal_power(2, -3) == 8
    assert reciprocal_power(2, 3) == Fraction(1, 8)
    with pytest.raises(DomainError):
        reciprocal_power(0, 1)


def test_theorem1_examples():
    for p in range(-4, 5):
        assert harmonic_theorem1(0, p) == 1  # H_1 = 1 no matter the exponent
    assert harmonic_theorem1(1, 2) == Fraction(5, 4)
    assert harmonic_theorem1(3, -2) == 30


def test_theorem1_equals_direct_on_grid():
    for p in range(-4, 5):
        for n in range(13):
            assert harmonic_theorem1(n, p) == harmonic_direct(n + 1, p), (n, p)


def test_theorem1_accepts_precomputed_batch():
    values = poly_bernoulli_sequence(3, 10)
    for n in range(11):
        assert harmonic_theorem1(n, 3, poly_bernoulli_values=values) == harmonic_theorem1(n, 3)
    with pytest.raises(ValueError):
        harmonic_theorem1(5, 3, poly_bernoulli_values=values[:3])


def test_classical_examples():
    assert harmonic_classical(0) == 1
    assert harmonic_classical(2) == Fraction(11, 6)
    assert harmonic_classical(5) == Fraction(49, 20)


def test_classical_is_the_exponent_one_slice():
    for n in range(16):
        assert harmonic_classical(n) == harmonic_theorem1(n, 1)
        assert harmonic_classical(n) == harmonic_direct(n + 1, 1)


def test_polybernoulli_from_harmonic_examples():
    for p in range(-3, 4):
        assert polybernoulli_from_harmonic(0, p) == 1
    assert polybernoulli_from_harmonic(1, 1) == Fraction(1, 2)
    assert polybernoulli_from_harmonic(2, -1) == 4


def test_polybernoulli_from_harmonic_matches_generating_function():
    for p in range(-3, 4):
        for n in range(11):
            assert polybernoulli_from_harmonic(n, p) == poly_bernoulli(n, p), (n, p)
