"""Suspension tiling of a primitive Pisot substitution, with exact tile lengths."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import ceil

from ..algebra import AlgebraicNumber, NumberField, perron_data, pisot_conjugates
from ..algebra.field import integerize
from ..substitution import Substitution, admissible_pairs, admissible_seed, incidence_matrix, is_primitive

Vec = tuple[int, ...]


class NotPisotError(ValueError):
    pass


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


@dataclass(frozen=True, eq=False)
class SuspensionTiling:
    substitution: Substitution
    field: NumberField
    beta: AlgebraicNumber
    lengths: tuple[AlgebraicNumber, ...]
    seed: tuple[int, int, int]

    @cached_property
    def int_lengths(self) -> tuple[Vec, ...]:
        return tuple(integerize(v.coords)[0] for v in self.lengths)

    @cached_property
    def zero(self) -> Vec:
        return (0,) * self.field.degree

    @cached_property
    def child_offsets(self) -> tuple[tuple[tuple[int, Vec], ...], ...]:
        """For each letter c, the (letter, left endpoint) pairs of the patch sigma(c)."""
        out = []
        for w in self.substitution.images:
            pos = self.zero
            row = []
            for a in w:
                row.append((a, pos))
                pos = vadd(pos, self.int_lengths[a - 1])
            out.append(tuple(row))
        return tuple(out)

    def length(self, a: int) -> Vec:
        return self.int_lengths[a - 1]

    def word_length(self, word) -> Vec:
        pos = self.zero
        for a in word:
            pos = vadd(pos, self.int_lengths[a - 1])
        return pos

    def sign(self, v: Vec) -> int:
        return self.field.sign(v)

    def approx(self, v: Vec) -> float:
        return float(self.field.element(v))

    # -- admissible words -----------------------------------------------

    def admissible_words(self, n: int) -> frozenset[tuple[int, ...]]:
        """All admissible words of length n.

        Each is a factor of sigma^k(xy) for an admissible pair xy once every
        sigma^k(c) has length >= n - 1.
        """
        cache = self.__dict__.setdefault("_words", {})
        if n in cache:
            return cache[n]
        s = self.substitution
        if n <= 1:
            out = frozenset((a,) for a in range(1, s.m + 1))
        else:
            k = 0
            imgs = [(a,) for a in range(1, s.m + 1)]
            while min(len(w) for w in imgs) < n - 1:
                imgs = [s(w) for w in imgs]
                k += 1
            found = set()
            for x, y in admissible_pairs(s):
                w = imgs[x - 1] + imgs[y - 1]
                for i in range(len(w) - n + 1):
                    found.add(w[i:i + n])
            out = frozenset(found)
        cache[n] = out
        return out

    def is_admissible(self, word) -> bool:
        return tuple(word) in self.admissible_words(len(word))

    def return_words(self, a: int) -> list[tuple[int, ...]]:
        """Words a u (u free of a) such that a u a is admissible."""
        out = []
        frontier = [(a,)]
        while frontier:
            nxt = []
            for w in frontier:
                if self.is_admissible(w + (a,)):
                    out.append(w)
                for c in range(1, self.substitution.m + 1):
                    if c != a and self.is_admissible(w + (c,)):
                        nxt.append(w + (c,))
            frontier = nxt
        return sorted(out)

    def return_vectors(self) -> list[Vec]:
        """Distinct lengths of all return words, sorted by value."""
        vecs = {self.word_length(w) for a in range(1, self.substitution.m + 1) for w in self.return_words(a)}
        return sorted(vecs, key=lambda v: (self.approx(v), v))

    def max_length_ratio(self) -> int:
        lens = [self.approx(v) for v in self.int_lengths]
        return ceil(max(lens) / min(lens))


def suspension(s: Substitution) -> SuspensionTiling:
    """Exact suspension tiling; the PF root must be a Pisot number."""
    M = incidence_matrix(s)
    if not is_primitive(M):
        raise ValueError("substitution is not primitive")
    pd = perron_data(M)
    ok, moduli = pisot_conjugates(pd.field.min_poly)
    if not ok:
        bad = ", ".join(f"{x:.6g}" for x in moduli)
        raise NotPisotError(f"PF root is not Pisot: roots of {pd.field.min_poly} outside the unit disc have modulus {bad}")
    return SuspensionTiling(s, pd.field, pd.beta, pd.left_eigenvector, admissible_seed(s))
