from fractions import Fraction

import pytest

from umbral_lab.lacasse import (
    XiValue,
    xi,
    xi2,
    xi2_closed_scaled,
    xi2_scaled,
    xi2_value,
    xi2_via_derangement_scaled,
    xi_scaled,
    xi_value,
)
from umbral_lab.sequences import self_power
from umbral_lab.umbra import derangement_poly_eval

from oracles import xi2_rational, xi_rational


def test_xi_scaled_examples():
    assert xi_scaled(1) == 2
    assert xi_scaled(2) == 10
    assert xi_scaled(3) == 78


def test_xi_examples():
    assert xi(1) == Fraction(2)
    assert xi(2) == Fraction(5, 2)
    assert xi(3) == Fraction(26, 9)


def test_xi2_scaled_examples():
    assert xi2_scaled(1) == 3
    assert xi2_scaled(2) == 18
    assert xi2_scaled(3) == 159


def test_xi2_examples():
    assert xi2(1) == Fraction(3)
    assert xi2(2) == Fraction(9, 2)
    assert xi2(3) == Fraction(53, 9)


def test_xi2_via_derangement_examples():
    assert xi2_via_derangement_scaled(1) == 3
    assert xi2_via_derangement_scaled(2) == 18
    assert xi2_via_derangement_scaled(3) == 159


def test_xi2_closed_examples():
    assert xi2_closed_scaled(1) == 3
    assert xi2_closed_scaled(2) == 18
    assert xi2_closed_scaled(3) == 159


@pytest.mark.parametrize("fn", [xi_scaled, xi, xi2_scaled, xi2,
                                xi2_via_derangement_scaled, xi2_closed_scaled])
def test_rejects_nonpositive(fn):
    with pytest.raises(ValueError):
        fn(0)
    with pytest.raises(ValueError):
        fn(-4)


def test_rational_forms_match_direct_sums():
    # the library computes scaled integers; the oracle evaluates the raw
    # probability-style sums in Fractions
    for n in range(1, 41):
        assert xi(n) == xi_rational(n)
        assert xi2(n) == xi2_rational(n)


def test_scaled_rational_coherence():
    for n in range(1, 81):
        assert xi(n) == Fraction(xi_scaled(n), self_power(n))
        assert xi2(n) == Fraction(xi2_scaled(n), self_power(n))
        assert xi(n).denominator > 0
        assert xi2(n).denominator > 0


def test_triple_agreement_to_60():
    for n in range(1, 61):
        a = xi2_scaled(n)
        assert a == xi2_via_derangement_scaled(n)
        assert a == xi2_closed_scaled(n)


def test_xi_equals_shifted_derangement_poly_value():
    for n in range(1, 61):
        assert xi_scaled(n) == derangement_poly_eval(n, n + 1)


def test_offset_between_sums_is_n():
    for n in range(1, 61):
        assert xi2(n) - xi(n) == n
        assert xi2_scaled(n) - xi_scaled(n) == n ** (n + 1)


def test_xi_value_bundles():
    v = xi_value(3)
    assert (v.n, v.scaled, v.value) == (3, 78, Fraction(26, 9))
    w = xi2_value(2)
    assert (w.n, w.scaled, w.value) == (2, 18, Fraction(9, 2))


def test_xi_value_rejects_incoherent_pair():
    with pytest.raises(ValueError):
        XiValue(2, 10, Fraction(3, 2))
