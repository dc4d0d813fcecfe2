"""Certified root location for integer polynomials.

Real roots are isolated with Sturm sequences in exact rational arithmetic.
Complex roots are enclosed in Gaussian-rational discs: a numerical
approximation ``z`` is turned into the disc ``|w - z| <= n |f(z)/f'(z)|``,
which always contains a root, and the discs are accepted once they are
pairwise disjoint.  Disc radii are evaluated exactly, so the only floating
point step is choosing the centres.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from .polynomials import (
    IntPolynomial,
    factor_integer_polynomial,
    qpoly_rem,
    root_bound,
    squarefree_part,
)


class RootOnUnitCircleError(ValueError):
    pass


# -- Sturm sequences --------------------------------------------------------


def sturm_sequence(f: IntPolynomial) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in f.coeffs], [Fraction(c) for c in f.derivative().coeffs]]
    while not (len(seq[-1]) == 1 and seq[-1][0] == 0):
        rem = qpoly_rem(seq[-2], seq[-1])
        seq.append([-c for c in rem])
    seq.pop()
    return seq


def _eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_changes(seq, x) -> int:
    prev = 0
    changes = 0
    for s in seq:
        v = _eval(s, x)
        if v == 0:
            continue
        sgn = 1 if v > 0 else -1
        if prev and sgn != prev:
            changes += 1
        prev = sgn
    return changes


def count_real_roots(f: IntPolynomial, lo, hi, seq=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    seq = seq or sturm_sequence(f)
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def isolate_real_roots(f: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals, one per distinct real root, in increasing order.

    Each interval is either a single rational point ``(r, r)`` or an open
    interval whose endpoints are not roots and where the square-free part of
    ``f`` changes sign.
    """
    g = squarefree_part(f)
    if g.degree < 1:
        return []
    seq = sturm_sequence(g)
    B = Fraction(root_bound(g))
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = count_real_roots(g, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            if g(hi) == 0:
                out.append((hi, hi))
                continue
            # lo may be the root of the neighbouring interval
            while g(lo) == 0:
                mid = (lo + hi) / 2
                if g(mid) == 0:
                    lo = hi = mid
                    break
                if count_real_roots(g, mid, hi, seq):
                    lo = mid
                else:
                    hi = mid
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def refine_root(f: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change interval of ``f`` until it is narrower than ``width``."""
    if lo == hi:
        return lo, hi
    flo = f(lo)
    if flo == 0:
        return lo, lo
    while hi - lo >= width:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def largest_real_root(f: IntPolynomial) -> tuple[Fraction, Fraction] | None:
    roots = isolate_real_roots(f)
    return roots[-1] if roots else None


# -- complex root discs -----------------------------------------------------


@dataclass(frozen=True)
class RootDisc:
    """Closed disc ``|z - centre| <= radius`` containing exactly one root."""

    re: Fraction
    im: Fraction
    radius: Fraction  # rational upper bound on the certified radius

    @property
    def is_real(self) -> bool:
        # discs centred on the real axis of a real polynomial hold a real root
        return self.im == 0

    def modulus_vs_one(self) -> int:
        """-1 if the disc lies inside the unit circle, +1 outside, 0 undecided."""
        c2 = self.re * self.re + self.im * self.im
        r = self.radius
        # inside: |c| + r < 1  <=>  r < 1 and |c|^2 < (1 - r)^2
        if r < 1 and c2 < (1 - r) ** 2:
            return -1
        # outside: |c| - r > 1  <=>  |c|^2 > (1 + r)^2
        if c2 > (1 + r) ** 2:
            return 1
        return 0

    def approx(self) -> complex:
        return complex(float(self.re), float(self.im))


def _sqrt_upper(x: Fraction, bits: int = 64) -> Fraction:
    """A rational upper bound on sqrt(x)."""
    if x <= 0:
        return Fraction(0)
    scale = 1 << (2 * bits)
    n = x.numerator * scale
    d = x.denominator
    q = -(-n // d)
    s = isqrt(q)
    if s * s < q:
        s += 1
    return Fraction(s, 1 << bits)


def _to_fraction(v, bits: int) -> Fraction:
    return Fraction(int(mpmath.nint(v * (1 << bits))), 1 << bits)


def _disc_for(f: IntPolynomial, df: IntPolynomial, re: Fraction, im: Fraction) -> Fraction | None:
    n = f.degree
    # complex evaluation with (re, im) pairs of Fractions
    def ev(poly):
        ar, ai = Fraction(0), Fraction(0)
        for c in reversed(poly.coeffs):
            ar, ai = ar * re - ai * im + c, ar * im + ai * re
        return ar, ai

    fr, fi = ev(f)
    dr, di = ev(df)
    den = dr * dr + di * di
    if den == 0:
        return None
    r2 = Fraction(n * n) * (fr * fr + fi * fi) / den
    return _sqrt_upper(r2)


def root_discs(f: IntPolynomial, digits: int = 40, max_digits: int = 640) -> list[RootDisc]:
    """Certified disjoint discs, one per root of a square-free polynomial."""
    g = squarefree_part(f)
    if g.degree < 1:
        return []
    dg = g.derivative()
    cap = max(max_digits, digits)
    while digits <= cap:
        discs = _try_discs(g, dg, digits)
        if discs is not None:
            return discs
        digits *= 2
    raise ArithmeticError(f"could not separate roots of {f}")


def _try_discs(g: IntPolynomial, dg: IntPolynomial, digits: int) -> list[RootDisc] | None:
    bits = int(digits * 3.33) + 8
    with mpmath.workdps(digits):
        approx = mpmath.polyroots(list(reversed(g.coeffs)), maxsteps=400, extraprec=4 * digits)
    discs = []
    for z in approx:
        z = mpmath.mpc(z)
        re = _to_fraction(z.real, bits)
        im = _to_fraction(z.imag, bits)
        if abs(im) < Fraction(1, 1 << (bits // 2)):
            im = Fraction(0)
        rad = _disc_for(g, dg, re, im)
        if rad is None:
            return None
        discs.append(RootDisc(re, im, rad))
    for i, a in enumerate(discs):
        for b in discs[i + 1:]:
            dx, dy = a.re - b.re, a.im - b.im
            if dx * dx + dy * dy <= (a.radius + b.radius) ** 2:
                return None
    discs.sort(key=lambda d: (d.re, d.im))
    return discs


def count_inside_unit_circle(f: IntPolynomial) -> int:
    """Number of roots strictly inside the unit circle.

    Multiplicities are respected up to degree 4 (via factoring); beyond that
    distinct roots are counted.  Raises RootOnUnitCircleError when a root of
    modulus one is detected.
    """
    if f.degree <= 4 and f.is_monic():
        factors = factor_integer_polynomial(f)
    else:
        factors = [f]
    total = 0
    for g in factors:
        total += _count_inside_squarefree(g)
    return total


def _count_inside_squarefree(g: IntPolynomial) -> int:
    if _has_unimodular_root_small(g):
        raise RootOnUnitCircleError(f"{g} has a root on the unit circle")
    digits = 40
    while True:
        discs = root_discs(g, digits=digits)
        states = [d.modulus_vs_one() for d in discs]
        if all(s != 0 for s in states):
            return sum(1 for s in states if s < 0)
        digits *= 2
        if digits > 2560:
            raise RootOnUnitCircleError(f"{g} appears to have a root on the unit circle")


def _has_unimodular_root_small(g: IntPolynomial) -> bool:
    # linear factors +-1 and cyclotomic quadratics are detected exactly
    if g.degree == 1:
        return abs(g.coeffs[0]) == abs(g.coeffs[1])
    if g.degree == 2 and g.is_monic():
        c, b, _ = g.coeffs
        return c == 1 and b * b < 4 or g(1) == 0 or g(-1) == 0
    return g(1) == 0 or g(-1) == 0
