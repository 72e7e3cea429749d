from fractions import Fraction

import pytest

from umbral_lab import sequences
from umbral_lab.sequences import (
    binomial,
    derangement,
    derangement_overrides,
    factorial,
    self_power,
)

from oracles import brute_force_derangement, derangements_two_term, iterated_factorial


def test_derangement_examples():
    assert derangement(0) == 1
    assert derangement(4) == 9
    assert derangement(6) == 265


def test_derangement_matches_brute_force_to_8():
    for n in range(9):
        assert derangement(n) == brute_force_derangement(n)


def test_derangement_matches_two_term_recurrence():
    oracle = derangements_two_term(300)
    for n in range(301):
        assert derangement(n) == oracle[n]


def test_derangement_one_term_recurrence_to_300():
    for n in range(1, 301):
        assert derangement(n) == n * derangement(n - 1) + (-1) ** n


def test_derangement_alternating_sum_identity_to_300():
    # n! * sum_{i<=n} (-1)^i / i! accumulated in exact rationals
    acc = Fraction(0)
    for n in range(301):
        acc += Fraction((-1) ** n, factorial(n))
        assert factorial(n) * acc == derangement(n)


def test_derangement_rejects_negative():
    with pytest.raises(ValueError):
        derangement(-1)


def test_derangement_is_memoized():
    derangement(120)
    size = len(sequences._derangements)
    assert size >= 121
    derangement(60)
    assert len(sequences._derangements) == size


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(10) == 3628800


def test_factorial_matches_iterated_multiplication():
    for n in range(0, 150, 7):
        assert factorial(n) == iterated_factorial(n)
    with pytest.raises(ValueError):
        factorial(-3)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(30, 15) == 155117520


def test_binomial_pascal_rule_and_symmetry():
    for n in range(1, 101):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
            assert binomial(n, k) == binomial(n, n - k)


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-2, 1)


def test_self_power_convention():
    assert self_power(0) == 1
    assert self_power(1) == 1
    assert self_power(5) == 3125
    with pytest.raises(ValueError):
        self_power(-1)


def test_overrides_apply_only_to_named_index():
    base3, base4 = derangement(3), derangement(4)
    with derangement_overrides({3: base3 + 1}):
        assert derangement(3) == base3 + 1
        # the recurrence is not re-fed: only the named value changes
        assert derangement(4) == base4
        assert derangement(2) == 1
    assert derangement(3) == base3


def test_overrides_do_not_pollute_cache_or_leak():
    with derangement_overrides({50: 0}):
        assert derangement(50) == 0
    assert derangement(50) == 50 * derangement(49) + 1

    with pytest.raises(RuntimeError):
        with derangement_overrides({2: 99}):
            raise RuntimeError("boom")
    assert derangement(2) == 1


def test_overrides_reject_negative_index():
    with pytest.raises(ValueError):
        with derangement_overrides({-1: 5}):
            pass


def test_overrides_nest():
    with derangement_overrides({2: 7}):
        with derangement_overrides({3: 9}):
            assert derangement(2) == 7
            assert derangement(3) == 9
        assert derangement(2) == 7
        assert derangement(3) == 2
