"""Overlap graph of a one-dimensional Pisot substitution tiling.

An overlap ``(i, j, x)`` is a tile of type i on [0, l_i] together with a tile
of type j on [x, x + l_j] whose interiors meet.  Offsets live in Z[beta] and
are stored as integer coordinate tuples, so nodes hash exactly.  Graph nodes
use the canonical orientation, which identifies ``(i, j, x)`` with
``(j, i, -x)``; ``oriented=True`` keeps both as separate nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import ceil
from typing import NamedTuple

from .suspension import SuspensionTiling, Vec, vadd, vneg, vsub


class Overlap(NamedTuple):
    i: int
    j: int
    x: Vec

    def is_coincidence(self) -> bool:
        return self.i == self.j and not any(self.x)

    def swapped(self) -> "Overlap":
        return Overlap(self.j, self.i, vneg(self.x))


@dataclass(frozen=True)
class Caps:
    max_nodes: int = 200_000
    max_pair_length: int = 10_000
    max_pairs: int = 200_000


DEFAULT_CAPS = Caps()


def is_valid_overlap(t: SuspensionTiling, o: Overlap) -> bool:
    return t.sign(vadd(o.x, t.length(o.j))) > 0 and t.sign(vsub(t.length(o.i), o.x)) > 0


def canonical_orientation(t: SuspensionTiling, o: Overlap) -> Overlap:
    """Representative of {o, o.swapped()} with x >= 0 (and i <= j when x = 0)."""
    s = t.sign(o.x)
    if s < 0 or (s == 0 and o.i > o.j):
        return o.swapped()
    return o


def overlap_length(t: SuspensionTiling, o: Overlap) -> Vec:
    """Length of the intersection of [0, l_i] and [x, x + l_j]."""
    right_i = t.length(o.i)
    right_j = vadd(o.x, t.length(o.j))
    right = right_i if t.sign(vsub(right_i, right_j)) <= 0 else right_j
    left = o.x if t.sign(o.x) > 0 else t.zero
    return vsub(right, left)


def overlap_children(t: SuspensionTiling, o: Overlap, oriented: bool = False) -> list[Overlap]:
    """Child overlaps after one inflation step, left to right, with repetition."""
    kids = [c for c, _ in _children_with_positions(t, o)]
    if oriented:
        return kids
    return [canonical_orientation(t, c) for c in kids]


def _children_with_positions(t: SuspensionTiling, o: Overlap) -> list[tuple[Overlap, Vec]]:
    field = t.field
    sign = field.sign
    A = t.child_offsets[o.i - 1]
    shift = field.mul_beta(o.x)
    B = [(b, vadd(shift, pb)) for b, pb in t.child_offsets[o.j - 1]]
    lens = t.int_lengths
    out = []
    ka = kb = 0
    na, nb = len(A), len(B)
    while ka < na and kb < nb:
        a, pa = A[ka]
        b, pb = B[kb]
        ea = vadd(pa, lens[a - 1])
        eb = vadd(pb, lens[b - 1])
        if sign(vsub(ea, pb)) <= 0:
            ka += 1
            continue
        if sign(vsub(eb, pa)) <= 0:
            kb += 1
            continue
        d = vsub(pb, pa)
        left = pb if sign(d) > 0 else pa
        out.append((Overlap(a, b, d), left))
        c = sign(vsub(ea, eb))
        if c <= 0:
            ka += 1
        if c >= 0:
            kb += 1
    return out


def initial_overlaps(t: SuspensionTiling) -> list[Overlap]:
    """Every overlap type of T with y + T and with -y + T, y a return vector."""
    seeds: set[Overlap] = set()
    lens = t.int_lengths
    lmin = min(t.approx(v) for v in lens)
    lmax = max(t.approx(v) for v in lens)
    for y in t.return_vectors():
        # words long enough to reach past y + l_max from their first letter
        n = ceil((t.approx(y) + lmax) / lmin) + 2
        for w in sorted(t.admissible_words(n)):
            pos = t.zero
            for k, c in enumerate(w):
                x = vsub(y, pos)  # tile w_0 shifted by y, seen from tile w_k at pos
                if t.sign(vadd(x, lens[w[0] - 1])) <= 0:
                    break
                if t.sign(vsub(lens[c - 1], x)) > 0:
                    o = Overlap(c, w[0], x)
                    seeds.add(o)
                    seeds.add(o.swapped())
                pos = vadd(pos, lens[c - 1])
    return sorted(seeds, key=node_key)


def node_key(o: Overlap):
    return (o.i, o.j, o.x)


@dataclass
class OverlapGraph:
    tiling: SuspensionTiling
    nodes: list[Overlap] = field(default_factory=list)
    index: dict = field(default_factory=dict)
    children: list[list[int]] = field(default_factory=list)  # ordered, with repetition
    complete: bool = True
    oriented: bool = False

    def add(self, o: Overlap) -> int:
        k = self.index.get(o)
        if k is None:
            k = len(self.nodes)
            self.index[o] = k
            self.nodes.append(o)
            self.children.append(None)
        return k

    @property
    def edge_count(self) -> int:
        return sum(len(set(c)) for c in self.children if c is not None)

    def multiplicities(self, k: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.children[k]:
            out[c] = out.get(c, 0) + 1
        return out

    def coincidence_nodes(self) -> list[int]:
        return [k for k, o in enumerate(self.nodes) if o.is_coincidence()]


def build_overlap_graph(
    t: SuspensionTiling, seeds=None, caps: Caps = DEFAULT_CAPS, order: str = "bfs", oriented: bool = False
) -> OverlapGraph:
    """Close the seed overlaps under inflation.

    Stops early (``complete = False``) once ``caps.max_nodes`` is exceeded.
    """
    g = OverlapGraph(t, oriented=oriented)
    if seeds is None:
        seeds = initial_overlaps(t)
    if not oriented:
        seeds = sorted({canonical_orientation(t, o) for o in seeds}, key=node_key)
    todo = deque(g.add(o) for o in seeds)
    while todo:
        k = todo.popleft() if order == "bfs" else todo.pop()
        if g.children[k] is not None:
            continue
        kids = []
        for c in overlap_children(t, g.nodes[k], oriented):
            n_before = len(g.nodes)
            ck = g.add(c)
            kids.append(ck)
            if len(g.nodes) > n_before:
                todo.append(ck)
        g.children[k] = kids
        if len(g.nodes) > caps.max_nodes:
            g.complete = False
            break
    return g
