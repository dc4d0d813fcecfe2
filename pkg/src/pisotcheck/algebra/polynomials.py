"""Integer polynomials: arithmetic, characteristic polynomials, small-degree factoring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence


class UnsupportedDegreeError(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(v) for v in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_high_first(cls, high_first: Sequence[int]) -> "IntPolynomial":
        """Build from coefficients listed leading term first."""
        return cls(reversed(list(high_first)))

    @property
    def degree(self) -> int:
        if self.is_zero():
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, n: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


X = IntPolynomial((0, 1))


def cubic(p: int, q: int, r: int) -> IntPolynomial:
    """x^3 - p x^2 - q x - r."""
    return IntPolynomial((-r, -q, -p, 1))


def kenyon_cubic(p: int, q: int, r: int) -> IntPolynomial:
    """x^3 - p x^2 + q x + r."""
    return IntPolynomial((r, q, -p, 1))


def char_poly(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    All divisions are exact over the integers.
    """
    n = len(matrix)
    if n == 0:
        return IntPolynomial((1,))
    A = [list(map(int, row)) for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]  # M_0 = 0
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod_ = _matmul(A, Mk)
        for i in range(n):
            prod_[i][i] += c
        Mk = prod_
        AM = _matmul(A, Mk)
        tr = sum(AM[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
    return IntPolynomial(coeffs)


def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    Oi[j] += a * Bk[j]
    return out


def divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def divmod_poly(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division by a monic g over the integers."""
    if not g.is_monic():
        raise ValueError("divisor must be monic")
    rem = list(f.coeffs)
    dg = g.degree
    if f.degree < dg:
        return IntPolynomial((0,)), f
    quo = [0] * (f.degree - dg + 1)
    for k in range(f.degree - dg, -1, -1):
        c = rem[k + dg]
        quo[k] = c
        if c:
            for i, gi in enumerate(g.coeffs):
                rem[k + i] -= c * gi
    return IntPolynomial(quo), IntPolynomial(rem[:dg] if dg else [0])


def root_bound(f: IntPolynomial) -> int:
    """Cauchy bound: every complex root has modulus below this integer."""
    lead = abs(f.leading)
    return 1 + max((abs(c) + lead - 1) // lead for c in f.coeffs[:-1]) if f.degree > 0 else 1


def _rational_root(f: IntPolynomial) -> int | None:
    if f.coeffs[0] == 0:
        return 0
    for d in divisors(f.coeffs[0]):
        for cand in (d, -d):
            if f(cand) == 0:
                return cand
    return None


def _quadratic_split(f: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial] | None:
    # monic quartic without rational roots: (x^2 + a x + b)(x^2 + c x + d)
    e0, e1, e2, e3, _ = f.coeffs
    R = root_bound(f)
    for b in divisors(e0):
        for bs in (b, -b):
            d = e0 // bs
            for a in range(-2 * R, 2 * R + 1):
                c = e3 - a
                if a * d + bs * c == e1 and bs + d + a * c == e2:
                    g = IntPolynomial((bs, a, 1))
                    h = IntPolynomial((d, c, 1))
                    if g * h == f:
                        return (g, h) if (g.coeffs[::-1] <= h.coeffs[::-1]) else (h, g)
    return None


def factor_integer_polynomial(f: IntPolynomial) -> list[IntPolynomial]:
    """Monic irreducible factors of a monic integer polynomial of degree <= 4.

    Repeated factors appear repeatedly; the product of the result equals ``f``.
    """
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    if f.degree > 4:
        raise UnsupportedDegreeError(f"degree {f.degree} > 4 is not supported")
    factors: list[IntPolynomial] = []
    rest = f
    while rest.degree >= 1:
        root = _rational_root(rest)
        if root is None:
            break
        lin = IntPolynomial((-root, 1))
        rest, rem = divmod_poly(rest, lin)
        assert rem.is_zero()
        factors.append(lin)
    if rest.degree == 4:
        split = _quadratic_split(rest)
        if split is not None:
            factors.extend(split)
        else:
            factors.append(rest)
    elif rest.degree >= 1:
        factors.append(rest)
    factors.sort(key=lambda g: (g.degree, [abs(c) for c in g.coeffs[::-1]], g.coeffs[::-1]))
    return factors


def is_irreducible(f: IntPolynomial) -> bool:
    fs = factor_integer_polynomial(f)
    return len(fs) == 1 and fs[0] == f


def is_irreducible_cubic(p: int, q: int, r: int) -> bool:
    """True iff x^3 - p x^2 - q x - r has no rational root."""
    if r == 0:
        return False
    f = cubic(p, q, r)
    return all(f(d) != 0 and f(-d) != 0 for d in divisors(r))


# -- rational polynomial helpers (lists of Fractions, constant first) --


def _trim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def qpoly_rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while len(a) >= len(b) and not (len(a) == 1 and a[0] == 0):
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] -= coef * bi
        a.pop()
        if not a:
            a = [Fraction(0)]
        _trim(a)
    return a


def qpoly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, qpoly_rem(a, b)
    lead = a[-1]
    return [c / lead for c in a]


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """Primitive integer polynomial with the same roots as f, all simple."""
    g = qpoly_gcd(f.coeffs, f.derivative().coeffs)
    if len(g) == 1:
        return f
    # exact division f / g over Q
    num = [Fraction(c) for c in f.coeffs]
    quo = [Fraction(0)] * (len(num) - len(g) + 1)
    for k in range(len(quo) - 1, -1, -1):
        c = num[k + len(g) - 1] / g[-1]
        quo[k] = c
        for i, gi in enumerate(g):
            num[k + i] -= c * gi
    den = 1
    for c in quo:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in quo]
    h = IntPolynomial(ints)
    cont = h.content()
    if h.leading < 0:
        cont = -cont
    return IntPolynomial(c // cont for c in ints)
