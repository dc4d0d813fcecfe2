"""Kenyon's free-group-endomorphism parameters (p, q, r) and their tile subdivisions.

The expansion has eigenvalues the roots of x^3 - p x^2 + q x + r.  A triple is
admissible when exactly one root lies inside the unit circle and the tiling
exists.  Tile translations stay symbolic, as integer coefficients of a, b, c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product
from math import lcm
from typing import NamedTuple

from .algebra import IntPolynomial, char_poly, kenyon_cubic, roots_inside_unit_circle
from .algebra.polynomials import qpoly_gcd, squarefree_part
from .algebra.roots import count_real_roots, isolate_real_roots, refine_root


@dataclass(frozen=True, order=True)
class KenyonParams:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.r < 1:
            raise ValueError("need p, q >= 0 and r >= 1")
        if self.p == 0 and self.q == 0:
            raise ValueError("p = q = 0 is excluded")

    def polynomial(self) -> IntPolynomial:
        return kenyon_cubic(self.p, self.q, self.r)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


def is_admissible(k: KenyonParams) -> bool:
    p, q, r = k.as_tuple()
    return (p - q - r - 1) * (p + q - r + 1) < 0 and abs(p - r) < q + 1


def enumerate_admissible(max_entry: int) -> list[KenyonParams]:
    """Admissible triples with every entry <= max_entry, in lexicographic order."""
    if max_entry < 0:
        raise ValueError("max_entry must be nonnegative")
    out = []
    for p, q, r in product(range(max_entry + 1), range(max_entry + 1), range(1, max_entry + 1)):
        if p == 0 and q == 0:
            continue
        k = KenyonParams(p, q, r)
        if is_admissible(k):
            out.append(k)
    return out


def published_triples() -> list[KenyonParams]:
    """The 34 triples with entries <= 3, as listed in the source table."""
    text = resources.files("pisotcheck.data").joinpath("kenyon34.json").read_text()
    return [KenyonParams(*t) for t in json.loads(text)["triples"]]


class Piece(NamedTuple):
    parent: int
    child: int
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class KenyonTileSystem:
    params: KenyonParams
    pieces: tuple[Piece, ...]
    as_printed: bool = False

    def children(self, parent: int) -> list[Piece]:
        return [pc for pc in self.pieces if pc.parent == parent]

    @property
    def subdivision_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Entry (i, j) counts pieces of type i+1 in the subdivision of tile j+1."""
        M = [[0] * 3 for _ in range(3)]
        for pc in self.pieces:
            M[pc.child - 1][pc.parent - 1] += 1
        return tuple(tuple(row) for row in M)

    def to_json(self) -> dict:
        p, q, r = self.params.as_tuple()
        return {
            "p": p,
            "q": q,
            "r": r,
            "pieces": [pc._asdict() for pc in self.pieces],
            "matrix": [list(row) for row in self.subdivision_matrix],
        }


def tile_system(k: KenyonParams, as_printed: bool = False) -> KenyonTileSystem:
    """Subdivision of T1, T2, T3 under the expansion.

    T3 gets r pieces of type T1 and p pieces of type T2 (at ic, i = 0..p-1).
    ``as_printed`` keeps only i = 1..p-1, the form whose matrix fails the
    area check for every admissible triple.
    """
    if not is_admissible(k):
        raise ValueError(f"{k.as_tuple()} is not admissible")
    p, q, r = k.as_tuple()
    pieces = [Piece(1, 2, 0, 0, 0)]
    pieces += [Piece(2, 2, -r, -i, p) for i in range(1, q + 1)]
    pieces += [Piece(2, 3, -i, 0, p) for i in range(1, r + 1)]
    pieces += [Piece(3, 1, -i, 0, p) for i in range(1, r + 1)]
    first = 1 if as_printed else 0
    pieces += [Piece(3, 2, 0, 0, i) for i in range(first, p)]
    return KenyonTileSystem(k, tuple(pieces), as_printed)


def pair_product_polynomial(k: KenyonParams) -> IntPolynomial:
    """Monic cubic whose roots are the pairwise products of roots of x^3 - p x^2 + q x + r."""
    p, q, r = k.as_tuple()
    return IntPolynomial.from_high_first([1, -q, -p * r, -r * r])


def _integer_poly(coeffs) -> IntPolynomial:
    den = lcm(*(Fraction(c).denominator for c in coeffs))
    return IntPolynomial(int(Fraction(c) * den) for c in coeffs)


def _small_root(k: KenyonParams) -> tuple[Fraction, Fraction]:
    """Interval around the unique root inside the unit circle, which is real and nonzero."""
    f = k.polynomial()
    inside = []
    for lo, hi in isolate_real_roots(f):
        while True:
            if -1 < lo and hi < 1 and (lo > 0 or hi < 0):
                inside.append((lo, hi))
                break
            if hi <= -1 or lo >= 1 or hi - lo == 0:
                break
            lo, hi = refine_root(f, lo, hi, (hi - lo) / 2)
    if len(inside) != 1:
        raise ValueError(f"{k.as_tuple()}: expected one real root inside the unit circle")
    return inside[0]


def area_factor_enclosure(k: KenyonParams, width: Fraction = Fraction(1, 2**40)) -> tuple[Fraction, Fraction]:
    """Interval containing r / |lambda_3|, lambda_3 the root inside the unit circle."""
    lo, hi = _small_root(k)
    lo, hi = refine_root(k.polynomial(), lo, hi, width)
    a, b = sorted((abs(lo), abs(hi)))
    return Fraction(k.r) / b, Fraction(k.r) / a


def area_expansion_check(k: KenyonParams, as_printed: bool = False) -> bool:
    """Perron root of the subdivision matrix equals r / |lambda_3|, decided exactly.

    Both numbers are roots of G(x) = g(x) g(-x), g the pair-product cubic:
    they agree iff the Perron root is a root of G lying in the isolating
    interval of G that holds r / |lambda_3|.
    """
    f = squarefree_part(char_poly(tile_system(k, as_printed).subdivision_matrix))
    g = pair_product_polynomial(k)
    G = squarefree_part(g * IntPolynomial(c * (-1) ** n for n, c in enumerate(g.coeffs)))
    a_lo, a_hi = area_factor_enclosure(k)
    rho_lo, rho_hi = isolate_real_roots(f)[-1]
    if rho_lo == rho_hi:
        rho_lo, rho_hi = rho_lo - Fraction(1, 2**60), rho_hi + Fraction(1, 2**60)
    # isolating interval of G around r / |lambda_3|
    J = None
    for lo, hi in isolate_real_roots(G):
        if lo == hi:
            lo, hi = lo - Fraction(1, 2**60), hi + Fraction(1, 2**60)
        if lo <= a_lo and a_hi <= hi:
            J = (lo, hi)
    if J is None:
        raise ArithmeticError("enclosure of r / |lambda_3| not isolated; refine further")
    lo, hi = max(J[0], rho_lo), min(J[1], rho_hi)
    if lo >= hi:
        return False
    h = _integer_poly(qpoly_gcd(f.coeffs, G.coeffs))
    return h.degree >= 1 and count_real_roots(h, lo, hi) > 0


def lambda_is_real(k: KenyonParams) -> bool:
    """Whether the two expanding roots are real, which fixes the embedding of a, b, c."""
    return len(isolate_real_roots(k.polynomial())) == 3


def kenyon_report(max_entry: int, as_printed: bool = False) -> list[dict]:
    out = []
    for k in enumerate_admissible(max_entry):
        ts = tile_system(k, as_printed)
        rec = ts.to_json()
        rec["inside_unit_circle"] = roots_inside_unit_circle(k.p, k.q, k.r)
        rec["area_check"] = area_expansion_check(k, as_printed)
        rec["lambda_real"] = lambda_is_real(k)
        out.append(rec)
    return out
