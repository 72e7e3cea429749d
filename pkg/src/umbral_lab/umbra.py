"""Moment evaluation of polynomials in the derangement umbra.

The umbra is a formal symbol whose n-th power stands for the n-th
derangement number.  Evaluating an ``IntPoly`` under the umbra therefore
means the linear map  sum_i c_i x^i  ->  sum_i c_i D_i:  a functional on
the coefficient sequence, not a symbol-rewriting system.  Substitutions
like x -> (umbra + s) are performed expand-then-substitute: the
polynomial is fully expanded first, each power is replaced by its shifted
binomial expansion, and only then may the result be moment-evaluated.
Partial evaluation inside unexpanded powers is never done; it would make
the operation ill-defined.

``UmbralExpr`` is an ``IntPoly`` whose variable is read as the umbra.
"""
from __future__ import annotations

from fractions import Fraction

from .polynomial import IntPoly, Scalar, binomial_power
from .sequences import derangement

UmbralExpr = IntPoly


def umbral_eval(p: UmbralExpr) -> int:
    """Replace each x^i by the i-th derangement number and sum."""
    return sum(c * derangement(i) for i, c in enumerate(p.coeffs) if c)


def derangement_poly(n: int) -> IntPoly:
    """Degree-n derangement polynomial: the x^j coefficient is C(n, j) * D_{n-j}.

    Monic, with constant term D_n; its value at 1 is n!.
    """
    if n < 0:
        raise ValueError(f"derangement_poly requires n >= 0 (got {n})")
    coeffs = [0] * (n + 1)
    row = 1  # C(n, j), updated incrementally
    for j in range(n + 1):
        coeffs[j] = row * derangement(n - j)
        row = row * (n - j) // (j + 1)
    return IntPoly(coeffs)


def derangement_poly_eval(n: int, x: Scalar) -> Scalar:
    """Value of the degree-n derangement polynomial at x, exactly."""
    if isinstance(x, Fraction) and x.denominator == 1:
        x = x.numerator
    return derangement_poly(n)(x)


def substitute_shift(p: IntPoly, s: int) -> UmbralExpr:
    """Substitute x -> (umbra + s) into p and expand.

    Returns sum_i a_i (x + s)^i as a polynomial in the umbra variable,
    ready for umbral_eval.
    """
    if not p.coeffs:
        return IntPoly()
    out = [0] * len(p.coeffs)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(binomial_power(s, i).coeffs):
                out[j] += a * b
    return IntPoly(out)


__all__ = [
    "UmbralExpr",
    "umbral_eval",
    "derangement_poly",
    "derangement_poly_eval",
    "substitute_shift",
]
