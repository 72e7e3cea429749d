"""Dense univariate polynomials with exact integer coefficients.

A polynomial is an immutable ``IntPoly`` holding a tuple of int
coefficients, index i being the coefficient of x^i.  Canonical form: the
zero polynomial has an empty coefficient tuple, otherwise the last
coefficient is nonzero.  What the variable stands for (a polynomial
argument, a substitution variable, the umbra) is contextual and carried by
usage, not by the type.

Addition, multiplication and evaluation are the ``+``, ``*`` and call
operators.  Multiplication is schoolbook convolution: degrees at desk
scale stay in the hundreds, where exactness and simplicity beat anything
asymptotically clever.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class IntPoly:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (IntPoly((other,)).coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        elif not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        elif not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) + (-self)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact for int and Fraction arguments."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def binomial_power(c: int, m: int) -> IntPoly:
    """(x + c)**m expanded: the x^i coefficient is C(m, i) * c**(m-i)."""
    if m < 0:
        raise ValueError(f"binomial_power requires m >= 0 (got {m})")
    if c == 0:
        return IntPoly([0] * m + [1])
    # powers of c from c^m down to c^0, walked while the C(m, i) row grows
    coeffs = [0] * (m + 1)
    cp = [1]
    for _ in range(m):
        cp.append(cp[-1] * c)
    row = 1
    for i in range(m + 1):
        coeffs[i] = row * cp[m - i]
        row = row * (m - i) // (i + 1)
    return IntPoly(coeffs)


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    """Functional alias for ``p + q``."""
    return p + q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Functional alias for ``p * q``."""
    return p * q


def poly_eval(p: IntPoly, x: Scalar) -> Scalar:
    """Functional alias for ``p(x)``."""
    return p(x)
