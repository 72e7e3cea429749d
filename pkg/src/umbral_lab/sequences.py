"""Memoized exact integer sequences: derangements, factorials, self powers.

All values are Python ints, so arithmetic is exact at any magnitude.  The
derangement and factorial caches grow on demand and are never evicted;
verification sweeps ascend in n, so later calls are cache hits.  Cache
growth is lock-protected and safe for concurrent readers.
"""
from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from functools import lru_cache
from typing import Iterator, Mapping

_grow_lock = threading.Lock()

_derangements = [1]  # D_0 = 1: the empty permutation has no fixed point
_factorials = [1]

# Read-time overlay for sensitivity experiments; see derangement_overrides.
_overrides: dict[int, int] = {}


def derangement(n: int) -> int:
    """Number of permutations of n elements with no fixed point.

    Computed by D_n = n*D_{n-1} + (-1)^n, which needs only the previous
    value; results are memoized.
    """
    if n < 0:
        raise ValueError(f"derangement is undefined for negative n (got {n})")
    if n >= len(_derangements):
        with _grow_lock:
            d = _derangements
            while len(d) <= n:
                m = len(d)
                d.append(m * d[m - 1] + (-1 if m % 2 else 1))
    if _overrides and n in _overrides:
        return _overrides[n]
    return _derangements[n]


def factorial(n: int) -> int:
    """n!, memoized."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    if n >= len(_factorials):
        with _grow_lock:
            f = _factorials
            while len(f) <= n:
                f.append(len(f) * f[-1])
    return _factorials[n]


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0 or k > n.

    The out-of-range convention lets summations run over unrestricted
    index ranges.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0 (got n={n})")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def self_power(n: int) -> int:
    """n**n with the convention 0**0 = 1."""
    if n < 0:
        raise ValueError(f"self_power is undefined for negative n (got {n})")
    return n**n


@contextmanager
def derangement_overrides(values: Mapping[int, int]) -> Iterator[None]:
    """Temporarily replace individual derangement values as seen by readers.

    Only the listed indices change; other values (including ones computed
    later through the recurrence) stay correct, and the underlying cache is
    never polluted.  This exists so tests can prove the identity verifiers
    are sensitive to wrong inputs.  Not intended for concurrent use.
    """
    for k in values:
        if k < 0:
            raise ValueError(f"cannot override derangement at negative index {k}")
    saved = dict(_overrides)
    _overrides.update(values)
    try:
        yield
    finally:
        _overrides.clear()
        _overrides.update(saved)
