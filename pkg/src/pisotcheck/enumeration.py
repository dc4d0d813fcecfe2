"""Irreducible cubic Pisot substitution matrices of trace <= 2 and their substitutions.

Matrices are reduced modulo simultaneous relabelling of rows and columns (S3
conjugation); substitutions with a given matrix are reduced modulo the
mirror map only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .algebra import char_poly, cubic, cubic_pisot_criterion, is_primitive
from .substitution import Matrix, Substitution, incidence_matrix, mirror, permute_matrix

TRACES = (0, 1, 2)
S3 = tuple(permutations((1, 2, 3)))

# diagonal shapes by trace, up to reordering of letters
DIAGONALS = {
    0: ((0, 0, 0),),
    1: ((1, 0, 0),),
    2: ((2, 0, 0), (1, 1, 0)),
}


def diag_label(M: Matrix) -> str:
    return "".join(str(x) for x in sorted((M[i][i] for i in range(3)), reverse=True))


@dataclass(frozen=True)
class MatrixClass:
    canonical: Matrix
    p: int
    q: int
    r: int
    raw_orbit_size: int

    @property
    def diag(self) -> str:
        return diag_label(self.canonical)

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.canonical for x in row)


@dataclass(frozen=True)
class EnumRecord:
    id: int
    matrix_class: MatrixClass
    substitution: Substitution

    def to_json(self) -> dict:
        c = self.matrix_class
        return {
            "id": self.id,
            "p": c.p,
            "q": c.q,
            "r": c.r,
            "diag": c.diag,
            "matrix": list(c.flat()),
            "words": self.substitution.text(),
        }


def check_trace(p: int) -> None:
    if p not in TRACES:
        raise ValueError(f"trace must be one of {TRACES}; trace 3 has far too many substitutions")


def r_values(p: int) -> list[int]:
    """All r admitting some q with the cubic Pisot inequalities.

    For r > 0 they force r < p + 2, for r < 0 they force |r| <= p.
    """
    return [r for r in range(-(p + 2), p + 3) if q_values(p, r)]


def q_values(p: int, r: int) -> list[int]:
    if r == 0:
        return []
    sgn = 1 if r > 0 else -1
    lower = max(2 - p - r, r * r - sgn * (1 + p * r) + 1)
    return [q for q in range(lower, p + r + 1) if cubic_pisot_criterion(p, q, r)]


def canonical_form(M: Sequence[Sequence[int]]) -> Matrix:
    """Row-major lexicographic minimum over all relabellings."""
    return min(permute_matrix(M, pi) for pi in S3)


def orbit(M: Sequence[Sequence[int]]) -> set[Matrix]:
    return {permute_matrix(M, pi) for pi in S3}


def entry_bound(diag: Sequence[int], q: int, r: int) -> int:
    """Bound L on the off-diagonal entries for a fixed diagonal."""
    k1, k2, k3 = diag
    s = q + k1 * k2 + k2 * k3 + k1 * k3
    return max(s, r - k1 * k2 * k3 + max(diag) * s)


def coarse_bound(p: int, q: int, r: int) -> int:
    return r + p * (q + p * p)


def _det3(M) -> int:
    (a, b, c), (d, e, f), (g, h, i) = M
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _product_pairs(t: int, bound: int) -> list[tuple[int, int]]:
    if t == 0:
        return [(0, 0)] + [(0, y) for y in range(1, bound + 1)] + [(y, 0) for y in range(1, bound + 1)]
    return [(d, t // d) for d in range(1, t + 1) if t % d == 0 and d <= bound and t // d <= bound]


def candidate_matrices(p: int, q: int, r: int, diag: Sequence[int]) -> Iterator[Matrix]:
    """Matrices with the given diagonal, entries within the bounds, and char poly x^3-px^2-qx-r."""
    k1, k2, k3 = diag
    s = q + k1 * k2 + k2 * k3 + k1 * k3  # = ac + be + df
    if s < 0:
        return
    bound = min(entry_bound(diag, q, r), coarse_bound(p, q, r))
    if bound < 0:
        return
    for t1 in range(s + 1):
        for t2 in range(s - t1 + 1):
            t3 = s - t1 - t2
            for (a, c), (b, e), (d, f) in product(
                _product_pairs(t1, bound), _product_pairs(t2, bound), _product_pairs(t3, bound)
            ):
                M = ((k1, a, b), (c, k2, d), (e, f, k3))
                if _det3(M) == r:
                    yield M


def matrix_classes(p: int, q: int, r: int) -> list[MatrixClass]:
    """Classes for one (p, q, r), sorted by diagonal type (200 before 110) then canonical form."""
    seen: set[Matrix] = set()
    out = []
    for diag in DIAGONALS[p]:
        for M in candidate_matrices(p, q, r, diag):
            if not is_primitive(M):
                continue
            C = canonical_form(M)
            if C in seen:
                continue
            seen.add(C)
            out.append(MatrixClass(C, p, q, r, len(orbit(C))))
    order = {lab: i for i, lab in enumerate(["".join(map(str, d)) for d in DIAGONALS[p]])}
    out.sort(key=lambda c: (order[c.diag], c.canonical))
    return out


def enumerate_matrices(p: int) -> Iterator[MatrixClass]:
    """All classes of trace p, ordered by r, then q, then diagonal type, then canonical form."""
    check_trace(p)
    for r in r_values(p):
        for q in q_values(p, r):
            for c in matrix_classes(p, q, r):
                assert char_poly(c.canonical) == cubic(p, q, r)
                yield c


def multiset_permutations(counts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements of the multiset {letter i+1: counts[i]} in lexicographic order."""
    seq = [i + 1 for i, c in enumerate(counts) for _ in range(c)]
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def columns(M: Matrix) -> list[tuple[int, ...]]:
    return [tuple(M[i][j] for i in range(len(M))) for j in range(len(M))]


def enumerate_substitutions(c: MatrixClass, start_id: int = 0) -> Iterator[EnumRecord]:
    """One representative per mirror pair, in lexicographic order of images."""
    cols = columns(c.canonical)
    n = start_id
    for images in product(*(multiset_permutations(col) for col in cols)):
        s = Substitution(images)
        if s.concatenated() <= mirror(s).concatenated():
            yield EnumRecord(n, c, s)
            n += 1


def all_substitutions(M: Matrix) -> Iterator[Substitution]:
    for images in product(*(multiset_permutations(col) for col in columns(M))):
        yield Substitution(images)


def multinomial(counts: Sequence[int]) -> int:
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


def palindrome_count(counts: Sequence[int]) -> int:
    """Palindromic arrangements of a multiset."""
    if sum(c % 2 for c in counts) > 1:
        return 0
    return multinomial([c // 2 for c in counts])


def substitution_counts(M: Matrix) -> tuple[int, int]:
    """(raw, retained) where retained counts mirror pairs once."""
    cols = columns(M)
    raw = prod(multinomial(col) for col in cols)
    fixed = prod(palindrome_count(col) for col in cols)
    return raw, (raw + fixed) // 2


ID_STRIDE = 1_000_000


def enumerate_records(p: int) -> Iterator[EnumRecord]:
    """Every retained substitution of trace p, with ids p * 10^6 + sequence number."""
    n = p * ID_STRIDE
    for c in enumerate_matrices(p):
        for rec in enumerate_substitutions(c, n):
            yield rec
            n = rec.id + 1


@dataclass(frozen=True)
class Table1Row:
    p: int
    r: int
    qs: tuple[int, ...]
    matrices: tuple[int, ...]  # split by diagonal type for p = 2
    substitutions: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "q": list(self.qs),
            "matrices": list(self.matrices),
            "substitutions": list(self.substitutions),
        }


def table1(explicit: bool = False) -> list[Table1Row]:
    """Counts of matrix classes and substitutions per (p, r).

    With ``explicit`` the substitutions are generated one by one instead of
    counted in closed form.
    """
    rows = []
    for p in TRACES:
        labels = ["".join(map(str, d)) for d in DIAGONALS[p]]
        for r in r_values(p):
            qs = tuple(q_values(p, r))
            mats = dict.fromkeys(labels, 0)
            subs = dict.fromkeys(labels, 0)
            for q in qs:
                for c in matrix_classes(p, q, r):
                    mats[c.diag] += 1
                    if explicit:
                        subs[c.diag] += sum(1 for _ in enumerate_substitutions(c))
                    else:
                        subs[c.diag] += substitution_counts(c.canonical)[1]
            rows.append(Table1Row(p, r, qs, tuple(mats.values()), tuple(subs.values())))
    return rows


def table1_totals(rows: Sequence[Table1Row]) -> dict:
    return {
        "substitutions": sum(sum(r.substitutions) for r in rows),
        "unit_substitutions": sum(sum(r.substitutions) for r in rows if abs(r.r) == 1),
        "matrices": sum(sum(r.matrices) for r in rows),
    }


def sample_records(records: Sequence[EnumRecord], n: int, seed: int) -> list[EnumRecord]:
    """Deterministic sample of n records, returned in id order."""
    import random

    rng = random.Random(seed)
    picked = rng.sample(range(len(records)), min(n, len(records)))
    return [records[i] for i in sorted(picked)]


def incidence_is_canonical(rec: EnumRecord) -> bool:
    return incidence_matrix(rec.substitution) == rec.matrix_class.canonical
