"""Cubic Pisot test, unit-circle root counting, primitive-substitution count bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log10

from .polynomials import IntPolynomial, cubic, factor_integer_polynomial, is_irreducible_cubic, kenyon_cubic
from .roots import RootOnUnitCircleError, count_inside_unit_circle, root_discs


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def cubic_pisot_criterion(p: int, q: int, r: int) -> bool:
    """Is x^3 - p x^2 - q x - r the minimal polynomial of a cubic Pisot number?"""
    if r == 0:
        return False
    lower = max(2 - p - r, r * r - _sign(r) * (1 + p * r) + 1)
    if not (lower <= q <= p + r):
        return False
    return is_irreducible_cubic(p, q, r)


def is_pisot_polynomial(f: IntPolynomial) -> bool:
    """Direct check by root location: irreducible, one real root > 1, the rest inside |z| < 1."""
    if not f.is_monic() or f.degree < 1:
        return False
    if f.degree <= 4:
        facs = factor_integer_polynomial(f)
        if len(facs) != 1:
            return False
    ok, _ = pisot_conjugates(f)
    return ok


def pisot_conjugates(f: IntPolynomial) -> tuple[bool, list[float]]:
    """Check that f has a single root outside the closed unit disc, real and > 1.

    Returns the verdict and approximate moduli of roots that are not inside the
    unit circle.  ``f`` must be square-free.
    """
    digits = 40
    while True:
        discs = root_discs(f, digits=digits)
        states = [d.modulus_vs_one() for d in discs]
        if all(states):
            break
        digits *= 2
        if digits > 2560:
            raise RootOnUnitCircleError(f"{f} has a root of modulus 1")
    outside = [d for d, s in zip(discs, states) if s > 0]
    moduli = [abs(d.approx()) for d in outside]
    ok = len(outside) == 1 and outside[0].is_real and outside[0].re > 0
    return ok, moduli


def roots_inside_unit_circle(p: int, q: int, r: int) -> int:
    """Roots of x^3 - p x^2 + q x + r strictly inside the unit circle.

    Sign changes of 1, D1, D2, D3 (Schur-Cohn); if any determinant vanishes
    the count comes from certified root discs instead.
    """
    if p < 0 or q < 0 or r < 1:
        raise ValueError("need p, q >= 0 and r >= 1")
    if p == 0 and q == 0:
        raise ValueError("p = q = 0: all roots have the same modulus")
    d1 = (r - 1) * (r + 1)
    d2 = -(p * r + q - r * r + 1) * (p * r + q + r * r - 1)
    d3 = (p - q - r - 1) * (p + q - r + 1) * (p * r + q + r * r - 1) ** 2
    if (p - q - r - 1) * (p + q - r + 1) == 0:
        raise RootOnUnitCircleError(f"x^3 - {p}x^2 + {q}x + {r} has a root at +-1")
    if d1 and d2 and d3:
        seq = [1, d1, d2, d3]
        return sum(1 for a, b in zip(seq, seq[1:]) if (a > 0) != (b > 0))
    return count_inside_unit_circle(kenyon_cubic(p, q, r))


def unified_criterion(p: int, q: int, r: int) -> bool:
    """One root inside the unit circle iff (p-q-r-1)(p+q-r+1) < 0."""
    return (p - q - r - 1) * (p + q - r + 1) < 0


@dataclass(frozen=True)
class BigBound:
    """base ** exponent, kept unevaluated."""

    base: int
    exponent: int

    def log10(self) -> float:
        if self.base <= 1:
            return 0.0
        return self.exponent * log10(self.base)

    def value(self, limit_digits: int = 10_000) -> int:
        if self.log10() > limit_digits:
            raise OverflowError(f"bound has ~{self.log10():.3g} digits")
        return self.base ** self.exponent

    def __str__(self) -> str:
        return f"{self.base}^{self.exponent}"


def substitution_count_bound(m: int, B) -> BigBound:
    """Upper bound m^(m^4 B^(2(m-1)^2 + 2)) on primitive substitutions with PF root <= B."""
    if m < 1:
        raise ValueError("m must be positive")
    B = Fraction(B)
    if B <= 0:
        raise ValueError("B must be positive")
    b = ceil(B)
    return BigBound(m, m ** 4 * b ** (2 * (m - 1) ** 2 + 2))


__all__ = [
    "BigBound",
    "cubic",
    "cubic_pisot_criterion",
    "is_irreducible_cubic",
    "is_pisot_polynomial",
    "pisot_conjugates",
    "roots_inside_unit_circle",
    "substitution_count_bound",
    "unified_criterion",
]
