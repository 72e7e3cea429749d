"""Exact evaluation of the xi binomial sums.

xi(n) is the single sum over k of C(n,k) (k/n)^k (1-k/n)^(n-k); xi2(n)
is the analogous double sum over k and j.  Both are computed here in
scaled-integer form (multiplied through by n^n, giving exact integers)
and in reduced-rational form.  The 0^0 = 1 convention applies uniformly;
the boundary terms of both sums require it, and Python's ``0**0`` already
agrees.

Three independent routes to the scaled second sum are provided:

* ``xi2_scaled``               - the raw double sum,
* ``xi2_via_derangement_scaled`` - binomial sum of derangement-polynomial
                                   values at shifted points,
* ``xi2_closed_scaled``        - binomial sum of (k+1)! n^(n-k).

They must agree for every n >= 1; the identities module and the CLI
bench command check that they do.  Equality checks are done on the
scaled integers, never on rationals, so comparisons are structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import factorial, self_power
from .umbra import derangement_poly_eval


def _require_positive(n: int, op: str) -> None:
    # the rational forms divide by n^n, so n = 0 is rejected at the boundary
    if n < 1:
        raise ValueError(f"{op} requires n >= 1 (got {n})")


def xi_scaled(n: int) -> int:
    """n^n * xi(n) = sum over k of C(n,k) k^k (n-k)^(n-k), an exact integer."""
    _require_positive(n, "xi_scaled")
    total = 0
    row = 1  # C(n, k)
    for k in range(n + 1):
        total += row * self_power(k) * self_power(n - k)
        row = row * (n - k) // (k + 1)
    return total


def xi(n: int) -> Fraction:
    """xi(n) in lowest terms."""
    _require_positive(n, "xi")
    return Fraction(xi_scaled(n), self_power(n))


def xi2_scaled(n: int) -> int:
    """n^n * xi2(n) via the raw double sum, an exact integer."""
    _require_positive(n, "xi2_scaled")
    total = 0
    row_k = 1  # C(n, k)
    for k in range(n + 1):
        m = n - k
        inner = 0
        row_j = 1  # C(m, j)
        for j in range(m + 1):
            inner += row_j * self_power(j) * self_power(m - j)
            row_j = row_j * (m - j) // (j + 1)
        total += row_k * self_power(k) * inner
        row_k = row_k * (n - k) // (k + 1)
    return total


def xi2(n: int) -> Fraction:
    """xi2(n) in lowest terms."""
    _require_positive(n, "xi2")
    return Fraction(xi2_scaled(n), self_power(n))


def xi2_via_derangement_scaled(n: int) -> int:
    """n^n * xi2(n) as sum over k of C(n,k) k^k Dpoly_{n-k}(n-k+1)."""
    _require_positive(n, "xi2_via_derangement_scaled")
    total = 0
    row = 1
    for k in range(n + 1):
        total += row * self_power(k) * derangement_poly_eval(n - k, n - k + 1)
        row = row * (n - k) // (k + 1)
    return total


def xi2_closed_scaled(n: int) -> int:
    """n^n * xi2(n) as sum over k of C(n,k) (k+1)! n^(n-k)."""
    _require_positive(n, "xi2_closed_scaled")
    total = 0
    row = 1
    npow = self_power(n)  # n^(n-k), divided down as k grows
    for k in range(n + 1):
        total += row * factorial(k + 1) * npow
        npow //= n
        row = row * (n - k) // (k + 1)
    return total


@dataclass(frozen=True)
class XiValue:
    """One xi-type value in both scaled-integer and reduced-rational form."""

    n: int
    scaled: int
    value: Fraction

    def __post_init__(self) -> None:
        if self.value != Fraction(self.scaled, self_power(self.n)):
            raise ValueError("scaled and rational forms disagree")


def xi_value(n: int) -> XiValue:
    s = xi_scaled(n)
    return XiValue(n, s, Fraction(s, self_power(n)))


def xi2_value(n: int) -> XiValue:
    s = xi2_scaled(n)
    return XiValue(n, s, Fraction(s, self_power(n)))
