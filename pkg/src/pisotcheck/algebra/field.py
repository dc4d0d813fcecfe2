"""Exact arithmetic in Q(beta) for a designated real root beta.

Elements are coordinate vectors in the power basis 1, beta, ..., beta^(d-1).
The minimal polynomial is monic and irreducible, so the representation is
unique and zero testing is a coordinate test.  Signs are decided by
evaluating against certified dyadic enclosures of the powers of beta, with
precision doubled until the enclosure excludes zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .polynomials import IntPolynomial
from .roots import count_real_roots, refine_root

Coords = tuple  # tuple of int or Fraction


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integerize(coords: Sequence) -> tuple[tuple[int, ...], int]:
    """Return (integer coords, positive denominator) with coords = ints / den."""
    den = 1
    for c in coords:
        if isinstance(c, Fraction):
            den = _lcm(den, c.denominator)
    if den == 1:
        return tuple(int(c) for c in coords), 1
    return tuple(int(c * den) for c in coords), den


@dataclass(frozen=True, eq=False)
class NumberField:
    min_poly: IntPolynomial
    root_interval: tuple[Fraction, Fraction]
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        f = self.min_poly
        if not f.is_monic() or f.degree < 1:
            raise ValueError("minimal polynomial must be monic of positive degree")
        lo, hi = (Fraction(x) for x in self.root_interval)
        object.__setattr__(self, "root_interval", (lo, hi))
        if lo > hi:
            raise ValueError("root interval must have lower <= upper")
        if lo == hi:
            if f(lo) != 0:
                raise ValueError("point interval is not a root")
        elif f(lo) == 0 or f(hi) == 0 or (f(lo) > 0) == (f(hi) > 0):
            raise ValueError("root interval must isolate a simple root by sign change")
        # multiplication by beta in the power basis (columns are images of basis vectors)
        d = f.degree
        tail = [-c for c in f.coeffs[:-1]]  # beta^d = sum tail[k] beta^k
        object.__setattr__(self, "_beta_pow_d", tuple(tail))
        object.__setattr__(self, "degree", d)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly and \
            self._same_root(other)

    def __hash__(self):
        return hash(self.min_poly)

    def _same_root(self, other: "NumberField") -> bool:
        a_lo, a_hi = self.root_interval
        b_lo, b_hi = other.root_interval
        if a_hi < b_lo or b_hi < a_lo:
            return False
        lo, hi = min(a_lo, b_lo), max(a_hi, b_hi)
        # both intervals hold one root each; the hull holds one root iff they agree
        return count_real_roots(self.min_poly, lo, hi) + int(self.min_poly(lo) == 0) == 1

    # -- root approximation -------------------------------------------------

    def root_enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational enclosure of beta of width below 2**-bits."""
        key = ("enc", bits)
        hit = self._cache.get(key)
        if hit is None:
            lo, hi = self.root_interval
            hit = refine_root(self.min_poly, lo, hi, Fraction(1, 1 << bits))
            self._cache[key] = hit
        return hit

    def approx_root(self) -> float:
        lo, hi = self.root_enclosure(60)
        return float((lo + hi) / 2)

    def refined(self, bits: int) -> "NumberField":
        """The same field with a narrower isolating interval."""
        lo, hi = self.root_enclosure(bits)
        return NumberField(self.min_poly, (lo, hi))

    def _power_bounds(self, n: int) -> tuple[list[int], list[int]]:
        # integer bounds lo_k <= beta^k * 2^n <= hi_k for k < degree
        key = ("pow", n)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        blo, bhi = self.root_enclosure(n + 16 + 4 * self.degree)
        los, his = [1 << n], [1 << n]
        plo, phi = Fraction(1), Fraction(1)
        scale = 1 << n
        for _ in range(1, self.degree):
            cands = (plo * blo, plo * bhi, phi * blo, phi * bhi)
            plo, phi = min(cands), max(cands)
            lo_s, hi_s = plo * scale, phi * scale
            los.append(lo_s.numerator // lo_s.denominator)
            his.append(-((-hi_s.numerator) // hi_s.denominator))
        hit = (los, his)
        self._cache[key] = hit
        return hit

    # -- element operations on raw coordinate tuples ------------------------

    def sign(self, coords: Sequence) -> int:
        ints, _ = integerize(coords)
        if not any(ints):
            return 0
        lo_r, hi_r = self.root_interval
        if lo_r == hi_r:
            v = sum(c * lo_r ** k for k, c in enumerate(ints))
            return (v > 0) - (v < 0)
        n = 64
        while True:
            los, his = self._power_bounds(n)
            lo = hi = 0
            for c, a, b in zip(ints, los, his):
                if c > 0:
                    lo += c * a
                    hi += c * b
                elif c < 0:
                    lo += c * b
                    hi += c * a
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            n *= 2

    def mul(self, a: Sequence, b: Sequence) -> tuple:
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def _reduce(self, prod: list) -> tuple:
        d = self.degree
        tail = self._beta_pow_d
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for i, t in enumerate(tail):
                    prod[k - d + i] += c * t
        return tuple(prod[:d])

    def mul_beta(self, a: Sequence) -> tuple:
        d = self.degree
        top = a[d - 1]
        out = [0] + list(a[: d - 1])
        if top:
            for i, t in enumerate(self._beta_pow_d):
                out[i] += top * t
        return tuple(out)

    def inverse(self, a: Sequence) -> tuple:
        """Solve a * x = 1 by Gaussian elimination on the multiplication matrix."""
        d = self.degree
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        cols = []
        basis = tuple(Fraction(int(i == 0)) for i in range(d))
        v = tuple(Fraction(x) for x in a)
        for _ in range(d):
            cols.append(v)
            v = self.mul_beta(v)
        # matrix with columns a*beta^j; solve for x with sum x_j col_j = 1
        A = [[cols[j][i] for j in range(d)] + [basis[i]] for i in range(d)]
        return tuple(_solve(A, d))

    def zero(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, (Fraction(0),) * self.degree)

    def one(self) -> "AlgebraicNumber":
        return self.element([1])

    def generator(self) -> "AlgebraicNumber":
        if self.degree == 1:
            return self.element([self.root_interval[0]])
        return self.element([0, 1])

    def element(self, coords: Sequence) -> "AlgebraicNumber":
        c = [Fraction(x) for x in coords]
        if len(c) > self.degree:
            c = list(self._reduce(c))
        c += [Fraction(0)] * (self.degree - len(c))
        return AlgebraicNumber(self, tuple(c))

    def __repr__(self) -> str:
        return f"NumberField({self.min_poly}, beta~{self.approx_root():.6g})"


def _solve(A: list[list[Fraction]], n: int) -> list[Fraction]:
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


@dataclass(frozen=True)
class AlgebraicNumber:
    field: NumberField
    coords: tuple

    def _coerce(self, other) -> "AlgebraicNumber":
        if isinstance(other, AlgebraicNumber):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraicNumber(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraicNumber(self.field, tuple(Fraction(x) for x in self.field.mul(self.coords, o.coords)))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.field, self.field.inverse(self.coords))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def sign(self) -> int:
        return self.field.sign(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (AlgebraicNumber, int, Fraction)) else None
        if o is None or o is NotImplemented:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        lo, hi = self.field.root_enclosure(60)
        b = (lo + hi) / 2
        return float(sum(c * b ** k for k, c in enumerate(self.coords)))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*b" if k == 1 else f"{c}*b^{k}")
        return "(" + (" + ".join(terms) or "0") + ")"


def sign_of(x: AlgebraicNumber) -> str:
    """'negative', 'zero' or 'positive'."""
    return {-1: "negative", 0: "zero", 1: "positive"}[x.sign()]
