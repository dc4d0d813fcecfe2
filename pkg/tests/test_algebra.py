from fractions import Fraction
from itertools import permutations, product

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pisotcheck.algebra import (
    IntPolynomial,
    NumberField,
    RootOnUnitCircleError,
    UnsupportedDegreeError,
    char_poly,
    cubic,
    cubic_pisot_criterion,
    factor_integer_polynomial,
    is_irreducible_cubic,
    is_pisot_polynomial,
    isolate_real_roots,
    kenyon_cubic,
    perron_data,
    root_discs,
    roots_inside_unit_circle,
    sign_of,
    substitution_count_bound,
    unified_criterion,
)
from pisotcheck.algebra.roots import count_inside_unit_circle
from pisotcheck.examples import FOUR_IET
from pisotcheck.substitution import incidence_matrix, permute_matrix

P = IntPolynomial.from_high_first
mpmath.mp.dps = 50


def oracle_roots(f: IntPolynomial):
    return mpmath.polyroots(list(reversed(f.coeffs)), maxsteps=200, extraprec=200)


# -- polynomials -------------------------------------------------------------


def test_polynomial_basics():
    f = P([1, 0, -1, -1])
    assert str(f) == "x^3 - x - 1"
    assert f.degree == 3 and f.is_monic()
    assert f(2) == 5
    assert (f * P([1, -1])).degree == 4
    assert P([0, 0]).is_zero() and P([0]).degree == -1
    assert f.derivative() == P([3, 0, -1])


def test_cubic_sign_conventions():
    assert cubic(1, 2, 3) == P([1, -1, -2, -3])
    assert kenyon_cubic(1, 2, 3) == P([1, -1, 2, 3])


def test_char_poly_examples():
    assert char_poly([[1, 1], [1, 0]]) == P([1, -1, -1])
    assert char_poly([[0, 1, 0], [0, 0, 1], [1, 1, 0]]) == P([1, 0, -1, -1])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=9, max_size=9), st.sampled_from(list(permutations((1, 2, 3)))))
def test_char_poly_relabelling_invariant(flat, pi):
    M = [flat[0:3], flat[3:6], flat[6:9]]
    f = char_poly(M)
    assert char_poly(permute_matrix(M, pi)) == f
    # transpose (mirror leaves the incidence matrix fixed; transpose is a further check)
    assert char_poly([list(r) for r in zip(*M)]) == f
    x = sympy.Symbol("x")
    expect = sympy.Poly(sympy.Matrix(M).charpoly(x).as_expr(), x).all_coeffs()
    assert f == P([int(c) for c in expect])


def test_factor_four_iet_quartic():
    f = P([1, -9, 20, -9, 1])
    assert factor_integer_polynomial(f) == [P([1, -3, 1]), P([1, -6, 1])]


def test_factor_misprinted_quartic_splits_differently():
    # the quartic with middle coefficient 22 is a different product
    assert factor_integer_polynomial(P([1, -9, 22, -9, 1])) == [P([1, -4, 1]), P([1, -5, 1])]


def test_factor_small_cases():
    assert factor_integer_polynomial(P([1, 0, -1, -1])) == [P([1, 0, -1, -1])]
    assert factor_integer_polynomial(P([1, -2, 0])) == [P([1, 0]), P([1, -2])]
    assert factor_integer_polynomial(P([1, -3, 3, -1])) == [P([1, -1])] * 3
    with pytest.raises(UnsupportedDegreeError):
        factor_integer_polynomial(P([1, 0, 0, 0, 0, -1]))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4))
def test_factor_product_and_irreducibility(low):
    f = IntPolynomial(low + [1])
    fs = factor_integer_polynomial(f)
    prod = IntPolynomial([1])
    for g in fs:
        prod = prod * g
        x = sympy.Symbol("x")
        assert sympy.Poly(list(reversed(g.coeffs)), x).is_irreducible
    assert prod == f


def test_is_irreducible_cubic_examples():
    assert is_irreducible_cubic(0, 1, 1)
    assert not is_irreducible_cubic(0, 0, 0)
    assert not is_irreducible_cubic(3, -3, 1)


# -- roots -------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5))
def test_isolated_intervals_hold_each_real_root(low):
    f = IntPolynomial(low + [1])
    ivs = isolate_real_roots(f)
    reals = sorted({float(z.real) for z in oracle_roots(f) if abs(z.imag) < 1e-30})
    assert len(ivs) == len(reals)
    for (lo, hi), x in zip(ivs, reals):
        assert float(lo) - 1e-12 <= x <= float(hi) + 1e-12


def test_root_discs_are_disjoint_and_contain_roots():
    f = P([1, -2, 1, 1])
    discs = root_discs(f)
    assert len(discs) == 3
    for z in oracle_roots(f):
        assert sum(abs(complex(z) - d.approx()) <= float(d.radius) + 1e-20 for d in discs) == 1


# -- number fields -----------------------------------------------------------


def test_sign_examples():
    K = NumberField(P([1, 0, -1, -1]), (Fraction(13, 10), Fraction(14, 10)))
    assert sign_of(K.generator() - 2) == "negative"
    assert sign_of(K.zero()) == "zero"
    L = NumberField(P([1, -6, 1]), (Fraction(5), Fraction(6)))
    assert sign_of(L.generator() - 5) == "positive"


def test_sign_of_tiny_element():
    # 3 + 2 sqrt 2 = 5.82842712474619009...
    L = NumberField(P([1, -6, 1]), (Fraction(5), Fraction(6)))
    b = L.generator()
    assert sign_of(b - Fraction(5828427124746190, 10**15)) == "positive"
    assert sign_of(b - Fraction(5828427124746191, 10**15)) == "negative"


field_coords = st.lists(st.integers(-50, 50), min_size=3, max_size=3)


@settings(max_examples=80, deadline=None)
@given(field_coords, field_coords, field_coords)
def test_ring_laws_and_uniqueness(a, b, c):
    K = NumberField(P([1, 0, -1, -1]), (Fraction(1), Fraction(2)))
    x, y, z = K.element(a), K.element(b), K.element(c)
    assert (x + y) * z == x * z + y * z
    assert (sign_of(x - y) == "zero") == (a == b)
    if a != [0, 0, 0]:
        assert x * x.inverse() == K.one()
    beta = mpmath.findroot(lambda t: t**3 - t - 1, 1.3)
    val = a[0] + a[1] * beta + a[2] * beta**2
    if abs(val) > 1e-30:
        assert x.sign() == (1 if val > 0 else -1)


# -- Perron data ---------------------------------------------------------------


def _check_left_eigen(M, pd):
    m = len(M)
    for j in range(m):
        lhs = pd.field.zero()
        for i in range(m):
            lhs = lhs + pd.left_eigenvector[i] * M[i][j]
        assert lhs == pd.beta * pd.left_eigenvector[j]
    assert all(sign_of(v) == "positive" for v in pd.left_eigenvector)


def test_perron_fibonacci():
    M = [[1, 1], [1, 0]]
    pd = perron_data(M)
    assert pd.field.min_poly == P([1, -1, -1])
    _check_left_eigen(M, pd)
    l1, l2 = pd.left_eigenvector
    assert l1 == pd.beta * l2


def test_perron_smallest_pisot():
    M = [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
    pd = perron_data(M)
    assert pd.field.min_poly == P([1, 0, -1, -1])
    assert abs(float(pd.beta) - 1.3247179572) < 1e-9
    _check_left_eigen(M, pd)


def test_perron_reducible_four_iet():
    M = incidence_matrix(FOUR_IET)
    pd = perron_data(M)
    assert pd.field.min_poly == P([1, -6, 1])
    assert abs(float(pd.beta) - (3 + 2 * 2**0.5)) < 1e-12
    _check_left_eigen(M, pd)


# -- criteria ------------------------------------------------------------------


def test_cubic_pisot_criterion_examples():
    assert cubic_pisot_criterion(0, 1, 1)
    assert not cubic_pisot_criterion(0, 0, 1)
    assert cubic_pisot_criterion(2, 1, -1)
    assert not cubic_pisot_criterion(1, 3, 1)


def _oracle_pisot(p, q, r) -> bool:
    x = sympy.Symbol("x")
    f = sympy.Poly(x**3 - p * x**2 - q * x - r, x)
    if r == 0 or not f.is_irreducible:
        return False
    roots = mpmath.polyroots([1, -p, -q, -r], maxsteps=200, extraprec=300)
    big = [z for z in roots if abs(z) > 1]
    small = [z for z in roots if abs(z) < 1]
    return len(big) == 1 and len(small) == 2 and abs(big[0].imag) < 1e-40 and big[0].real > 1


def test_cubic_pisot_criterion_brute_force():
    for p, q, r in product(range(-5, 6), repeat=3):
        expect = _oracle_pisot(p, q, r)
        assert cubic_pisot_criterion(p, q, r) == expect, (p, q, r)
        assert is_pisot_polynomial(cubic(p, q, r)) == expect, (p, q, r)


def test_roots_inside_examples():
    assert roots_inside_unit_circle(2, 1, 1) == 1
    assert roots_inside_unit_circle(3, 0, 3) == 1
    with pytest.raises(ValueError):
        roots_inside_unit_circle(0, 0, 1)
    with pytest.raises(RootOnUnitCircleError):
        roots_inside_unit_circle(3, 1, 1)


def test_roots_inside_grid_against_oracle():
    for p, q, r in product(range(11), range(11), range(1, 11)):
        if p == q == 0:
            continue
        roots = mpmath.polyroots([1, -p, q, r], maxsteps=200, extraprec=300)
        on_circle = any(abs(abs(z) - 1) < mpmath.mpf(10) ** -30 for z in roots)
        if on_circle:
            with pytest.raises(RootOnUnitCircleError):
                roots_inside_unit_circle(p, q, r)
            continue
        n = roots_inside_unit_circle(p, q, r)
        assert n == sum(abs(z) < 1 for z in roots), (p, q, r)
        assert n == count_inside_unit_circle(kenyon_cubic(p, q, r))
        assert (n == 1) == unified_criterion(p, q, r), (p, q, r)


def test_substitution_count_bound():
    assert (substitution_count_bound(2, 2).base, substitution_count_bound(2, 2).exponent) == (2, 256)
    assert substitution_count_bound(3, 2).exponent == 82944
    assert substitution_count_bound(1, 7).exponent == 49
    assert substitution_count_bound(2, Fraction(3, 2)).exponent == 256
    assert str(substitution_count_bound(2, 2)) == "2^256"
    assert substitution_count_bound(2, 2).value() == 2**256
