"""Symbolic substitutions over the alphabet 1..m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import IntPolynomial, char_poly as _char_poly, is_primitive as _is_primitive

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Substitution:
    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(tuple(int(a) for a in w) for w in self.images)
        object.__setattr__(self, "images", images)
        m = len(images)
        if m == 0:
            raise ValueError("empty alphabet")
        for w in images:
            if not w:
                raise ValueError("substitution must be non-erasing")
            if any(not 1 <= a <= m for a in w):
                raise ValueError(f"letters must lie in 1..{m}")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, word: Iterable[int]) -> Word:
        out: list[int] = []
        for a in word:
            out.extend(self.images[a - 1])
        return tuple(out)

    def image(self, a: int) -> Word:
        return self.images[a - 1]

    def iterate(self, word: Iterable[int], n: int) -> Word:
        w = tuple(word)
        for _ in range(n):
            w = self(w)
        return w

    def power(self, k: int) -> "Substitution":
        return Substitution(tuple(self.iterate((a,), k) for a in range(1, self.m + 1)))

    def incidence_matrix(self) -> Matrix:
        return incidence_matrix(self)

    def mirror(self) -> "Substitution":
        return mirror(self)

    def permute(self, pi: Sequence[int]) -> "Substitution":
        return permute(self, pi)

    def concatenated(self) -> Word:
        """Images concatenated; the order used for mirror-pair representatives."""
        return tuple(a for w in self.images for a in w)

    def text(self) -> str:
        return format_substitution(self)

    @classmethod
    def parse(cls, text: str) -> "Substitution":
        return parse_substitution(text)

    def __str__(self) -> str:
        return self.text()


def format_substitution(s: Substitution) -> str:
    sep = "" if s.m < 10 else ","
    return ";".join(f"{a}->{sep.join(map(str, w))}" for a, w in enumerate(s.images, 1))


def parse_substitution(text: str) -> Substitution:
    """Parse the ``1->12;2->1`` form; images use commas when m >= 10."""
    raw = {}
    for part in text.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        lhs, arrow, rhs = part.partition("->")
        if not arrow:
            raise ValueError(f"malformed rule {part!r}")
        raw[int(lhs)] = rhs.strip()
    m = len(raw)
    wide = m >= 10 or any("," in rhs for rhs in raw.values())
    rules = {a: tuple(int(x) for x in (rhs.split(",") if wide else rhs)) for a, rhs in raw.items()}
    if sorted(rules) != list(range(1, m + 1)):
        raise ValueError("rules must cover letters 1..m exactly once")
    return Substitution(tuple(rules[a] for a in range(1, m + 1)))


def incidence_matrix(s: Substitution) -> Matrix:
    """Entry (i, j) counts letter i in the image of letter j."""
    m = s.m
    M = [[0] * m for _ in range(m)]
    for j, w in enumerate(s.images):
        for a in w:
            M[a - 1][j] += 1
    return tuple(tuple(row) for row in M)


def is_primitive(M: Sequence[Sequence[int]]) -> bool:
    return _is_primitive(M)


def char_poly(M: Sequence[Sequence[int]]) -> IntPolynomial:
    return _char_poly(M)


def mirror(s: Substitution) -> Substitution:
    return Substitution(tuple(w[::-1] for w in s.images))


def permute(s: Substitution, pi: Sequence[int]) -> Substitution:
    """Relabel letter j as pi[j-1]."""
    m = s.m
    if sorted(pi) != list(range(1, m + 1)):
        raise ValueError("pi must be a permutation of 1..m")
    images: list[Word] = [()] * m
    for j, w in enumerate(s.images, 1):
        images[pi[j - 1] - 1] = tuple(pi[a - 1] for a in w)
    return Substitution(tuple(images))


def permute_matrix(M: Sequence[Sequence[int]], pi: Sequence[int]) -> Matrix:
    """P M P^-1 for the relabelling j -> pi[j-1]."""
    m = len(M)
    out = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            out[pi[i] - 1][pi[j] - 1] = M[i][j]
    return tuple(tuple(r) for r in out)


def admissible_pairs(s: Substitution) -> frozenset[tuple[int, int]]:
    """All admissible two-letter words.

    Start from the factors of every image and close under the substitution:
    the image of an admissible word xy contributes its boundary factor.
    """
    found: set[tuple[int, int]] = set()
    for w in s.images:
        found.update(zip(w, w[1:]))
    todo = list(found)
    while todo:
        x, y = todo.pop()
        w = s.images[x - 1] + s.images[y - 1]
        for pair in zip(w, w[1:]):
            if pair not in found:
                found.add(pair)
                todo.append(pair)
    return frozenset(found)


def admissible_seed(s: Substitution) -> tuple[int, int, int]:
    """(k, b, a): sigma^k(a) starts with a, sigma^k(b) ends with b, ba admissible.

    Smallest k <= m^2 wins; ties are broken by smallest a, then largest b.
    """
    if not is_primitive(incidence_matrix(s)):
        raise ValueError("admissible_seed requires a primitive substitution")
    m = s.m
    pairs = admissible_pairs(s)
    first = [w[0] for w in s.images]
    last = [w[-1] for w in s.images]
    fk = list(range(1, m + 1))
    lk = list(range(1, m + 1))
    for k in range(1, m * m + 1):
        fk = [first[c - 1] for c in fk]
        lk = [last[c - 1] for c in lk]
        starts = [a for a in range(1, m + 1) if fk[a - 1] == a]
        ends = [b for b in range(m, 0, -1) if lk[b - 1] == b]
        for a in starts:
            for b in ends:
                if (b, a) in pairs:
                    return k, b, a
    raise ValueError("no admissible seed found")


def letter_isomorphisms(s: Substitution, t: Substitution) -> list[tuple[int, ...]]:
    """All relabellings pi with permute(s, pi) == t, in lexicographic order."""
    if s.m != t.m or sorted(map(len, s.images)) != sorted(map(len, t.images)):
        return []
    m = s.m
    found: list[tuple[int, ...]] = []

    def extend(pi: dict[int, int]) -> dict[int, int] | None:
        pi = dict(pi)
        used = {}
        for a, b in pi.items():
            if used.setdefault(b, a) != a:
                return None
        todo = list(pi.items())
        while todo:
            a, b = todo.pop()
            u, w = s.image(a), t.image(b)
            if len(u) != len(w):
                return None
            for x, y in zip(u, w):
                if x in pi:
                    if pi[x] != y:
                        return None
                elif used.setdefault(y, x) != x:
                    return None
                else:
                    pi[x] = y
                    todo.append((x, y))
        return pi

    def search(pi: dict[int, int]) -> None:
        free = [a for a in range(1, m + 1) if a not in pi]
        if not free:
            found.append(tuple(pi[a] for a in range(1, m + 1)))
            return
        a = free[0]
        taken = set(pi.values())
        for b in range(1, m + 1):
            if b not in taken:
                nxt = extend({**pi, a: b})
                if nxt is not None:
                    search(nxt)

    search({})
    return sorted(found)


def automorphisms(s: Substitution) -> list[tuple[int, ...]]:
    return letter_isomorphisms(s, s)
