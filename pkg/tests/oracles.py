"""Independent oracles for the test suite.

Everything here recomputes values by a route the library does not use:
permutation scans, the two-term derangement recurrence, Pascal's triangle,
naive summation, and direct rational evaluation of the xi sums.  Tests
compare library output against these, never against the library itself.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def brute_force_derangement(n: int) -> int:
    """Count fixed-point-free permutations by scanning all n! of them."""
    return sum(
        1
        for p in itertools.permutations(range(n))
        if all(p[i] != i for i in range(n))
    )


def derangements_two_term(limit: int) -> list[int]:
    """D_0..D_limit via D_n = (n-1)(D_{n-1} + D_{n-2}), the recurrence the
    library does not use."""
    values = [1, 0]
    for n in range(2, limit + 1):
        values.append((n - 1) * (values[n - 1] + values[n - 2]))
    return values[: limit + 1]


def pascal_triangle(limit: int) -> list[list[int]]:
    """Rows 0..limit of Pascal's triangle, built purely by addition."""
    rows = [[1]]
    for _ in range(limit):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def iterated_factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


_PASCAL = pascal_triangle(320)
_DERANGEMENTS = derangements_two_term(320)


def comb(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return _PASCAL[n][k]


def dpoly_value(n: int, x: int | Fraction) -> int | Fraction:
    """Naive term-by-term derangement-polynomial value."""
    return sum(comb(n, k) * _DERANGEMENTS[k] * x ** (n - k) for k in range(n + 1))


def xi_rational(n: int) -> Fraction:
    """The first xi sum evaluated directly in exact rationals."""
    total = Fraction(0)
    for k in range(n + 1):
        total += comb(n, k) * Fraction(k, n) ** k * Fraction(n - k, n) ** (n - k)
    return total


def xi2_rational(n: int) -> Fraction:
    """The second xi sum evaluated directly in exact rationals."""
    total = Fraction(0)
    for k in range(n + 1):
        for j in range(n - k + 1):
            total += (
                comb(n, k)
                * comb(n - k, j)
                * Fraction(k, n) ** k
                * Fraction(j, n) ** j
                * Fraction(n - k - j, n) ** (n - k - j)
            )
    return total


def poly_mul_lists(a: list[int], b: list[int]) -> list[int]:
    """Convolution on bare coefficient lists (trailing zeros kept)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        for j, d in enumerate(b):
            out[i + j] += c * d
    return out
