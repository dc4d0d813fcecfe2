"""Perron-Frobenius root and exact left eigenvector of a primitive integer matrix."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .field import AlgebraicNumber, NumberField, integerize
from .polynomials import IntPolynomial, UnsupportedDegreeError, char_poly, factor_integer_polynomial
from .roots import isolate_real_roots, refine_root, root_discs


class NotPrimitiveError(ValueError):
    pass


def is_primitive(M: Sequence[Sequence[int]]) -> bool:
    """Some power M^k with k <= (m-1)^2 + 1 is entrywise positive.

    Powers are taken over the boolean semiring.
    """
    m = len(M)
    if m == 0:
        return False
    if any(x < 0 for row in M for x in row):
        return False
    B = [[bool(x) for x in row] for row in M]
    P = [row[:] for row in B]
    for _ in range((m - 1) ** 2 + 1):
        if all(all(row) for row in P):
            return True
        P = [[any(P[i][k] and B[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    return False


class PerronData(NamedTuple):
    field: NumberField
    beta: AlgebraicNumber
    left_eigenvector: tuple[AlgebraicNumber, ...]


def irreducible_factors(f: IntPolynomial) -> list[IntPolynomial]:
    try:
        return factor_integer_polynomial(f)
    except UnsupportedDegreeError:
        import sympy

        x = sympy.Symbol("x")
        expr = sum(c * x ** k for k, c in enumerate(f.coeffs))
        out = []
        for fac, mult in sympy.factor_list(expr)[1]:
            coeffs = [int(c) for c in reversed(sympy.Poly(fac, x).all_coeffs())]
            out.extend([IntPolynomial(coeffs)] * mult)
        return out


def perron_root_field(f: IntPolynomial) -> NumberField:
    """Number field of the irreducible factor of ``f`` holding its largest real root."""
    best = None
    for g in sorted(set(irreducible_factors(f)), key=lambda h: h.coeffs):
        iso = isolate_real_roots(g)
        if not iso:
            continue
        lo, hi = iso[-1]
        if best is None:
            best = (g, lo, hi)
            continue
        bg, blo, bhi = best
        # distinct irreducible factors share no root; refine until the intervals separate
        width = Fraction(1, 2)
        while not (hi < blo or bhi < lo):
            lo, hi = refine_root(g, lo, hi, width)
            blo, bhi = refine_root(bg, blo, bhi, width)
            width /= 2
        best = (g, lo, hi) if lo > bhi else (bg, blo, bhi)
    if best is None:
        raise ValueError(f"{f} has no real root")
    g, lo, hi = best
    return NumberField(g, (lo, hi))


def _dominance_certified(f: IntPolynomial, field: NumberField) -> bool:
    # beta strictly exceeds the modulus of every other root of f
    blo, _ = field.root_enclosure(80)
    for g in set(irreducible_factors(f)):
        discs = root_discs(g, digits=60)
        if g == field.min_poly:
            # beta is the largest real root of its own factor
            own = max((d for d in discs if d.is_real), key=lambda d: d.re)
            discs = [d for d in discs if d is not own]
        for d in discs:
            c2 = d.re * d.re + d.im * d.im
            if not (d.radius < blo and c2 < (blo - d.radius) ** 2):
                return False
    return True


def perron_data(M: Sequence[Sequence[int]]) -> PerronData:
    """PF root beta and a positive left eigenvector with l M = beta l.

    The eigenvector has coordinates in Z[beta] with content 1.
    """
    if not is_primitive(M):
        raise NotPrimitiveError("matrix is not primitive")
    m = len(M)
    f = char_poly(M)
    field = perron_root_field(f)
    if not _dominance_certified(f, field):
        raise ArithmeticError("could not certify dominance of the Perron-Frobenius root")
    beta = field.generator()
    # kernel of (M^T - beta I): rows i, unknowns l_j, equation sum_j l_j (M_ji - beta d_ij) = 0
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            e = field.element([M[j][i]])
            if i == j:
                e = e - beta
            row.append(e)
        rows.append(row)
    vec = _kernel_vector(rows, m, field)
    # normalise: integer power-basis coordinates, content 1, positive
    flat = [c for v in vec for c in v.coords]
    _, den = integerize(flat)
    ints = [integerize(tuple(c * den for c in v.coords))[0] for v in vec]
    g = 0
    for t in ints:
        for c in t:
            g = gcd(g, c)
    ints = [tuple(c // g for c in t) for t in ints]
    if field.sign(ints[0]) < 0:
        ints = [tuple(-c for c in t) for t in ints]
    left = tuple(field.element(t) for t in ints)
    if any(v.sign() <= 0 for v in left):
        raise ArithmeticError("eigenvector is not positive")
    return PerronData(field, beta, left)


def _kernel_vector(rows, m, field):
    # Gaussian elimination over Q(beta); kernel of the simple eigenvalue is 1-dimensional
    A = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, m) if not A[i][c].is_zero()), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(m) if c not in pivots]
    if len(free) != 1:
        raise ArithmeticError(f"eigenspace has dimension {len(free)}")
    fc = free[0]
    vec = [field.zero() for _ in range(m)]
    vec[fc] = field.one()
    for i, c in enumerate(pivots):
        vec[c] = -A[i][fc]
    return vec
