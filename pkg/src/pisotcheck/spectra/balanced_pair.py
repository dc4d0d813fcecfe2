"""Balanced pair algorithm for irreducible Pisot substitutions (a semi-decision procedure)."""

from __future__ import annotations

from collections import deque

from ..algebra import char_poly, is_irreducible, is_pisot_polynomial
from ..substitution import Substitution, incidence_matrix, is_primitive
from .overlap import DEFAULT_CAPS, Caps
from .verdict import Status, Verdict

Pair = tuple[tuple[int, ...], tuple[int, ...]]


class ReducibleSubstitutionError(ValueError):
    pass


def self_starting_power(s: Substitution) -> tuple[int, int]:
    """(k, a): the smallest k with some letter a starting sigma^k(a); smallest such a."""
    first = [w[0] for w in s.images]
    m = s.m
    fk = list(range(1, m + 1))
    for k in range(1, m * m + 1):
        fk = [first[c - 1] for c in fk]
        for a in range(1, m + 1):
            if fk[a - 1] == a:
                return k, a
    raise ValueError("no letter starts an iterate of its own image")


def initial_pair(s: Substitution, a: int) -> Pair:
    """(aV, Va) with aV the prefix of the fixed point starting with a, up to its second a."""
    w = (a,)
    while a not in w[1:]:
        w = s(w)
    cut = w.index(a, 1)
    u = w[:cut]
    return u, u[1:] + u[:1]


def decompose(u, v, m: int) -> list[Pair]:
    """Split a balanced pair into irreducible balanced pairs (minimal balanced prefixes)."""
    out = []
    diff = [0] * (m + 1)
    start = 0
    for n, (x, y) in enumerate(zip(u, v)):
        diff[x] += 1
        diff[y] -= 1
        if not any(diff):
            out.append((tuple(u[start:n + 1]), tuple(v[start:n + 1])))
            start = n + 1
    if start != len(u):
        raise ValueError("pair is not balanced")
    return out


def balanced_pair_check(s: Substitution, caps: Caps = DEFAULT_CAPS) -> Verdict:
    M = incidence_matrix(s)
    if not is_primitive(M):
        raise ValueError("substitution is not primitive")
    f = char_poly(M)
    if not is_irreducible(f):
        raise ReducibleSubstitutionError(f"characteristic polynomial {f} is reducible")
    if not is_pisot_polynomial(f):
        raise ValueError(f"{f} is not a Pisot polynomial")
    k, a = self_starting_power(s)
    start = initial_pair(s.power(k), a)
    pairs: dict[Pair, int] = {}
    children: list[list[int]] = []
    order: list[Pair] = []

    def add(pr: Pair) -> int:
        if pr not in pairs:
            pairs[pr] = len(order)
            order.append(pr)
            children.append(None)
        return pairs[pr]

    todo = deque(add(pr) for pr in decompose(*start, s.m))
    while todo:
        n = todo.popleft()
        if children[n] is not None:
            continue
        u, v = order[n]
        kids = []
        for pr in decompose(s(u), s(v), s.m):
            if len(pr[0]) > caps.max_pair_length:
                return _inconclusive("max_pair_length", order, children)
            before = len(order)
            c = add(pr)
            kids.append(c)
            if len(order) > before:
                todo.append(c)
        children[n] = kids
        if len(order) > caps.max_pairs:
            return _inconclusive("max_pairs", order, children)
    # reverse search from coincidences (c, c)
    parents: list[list[int]] = [[] for _ in order]
    for n, kids in enumerate(children):
        for c in set(kids):
            parents[c].append(n)
    nxt = {}
    q = deque()
    for n, (u, v) in enumerate(order):
        if len(u) == 1 and u == v:
            nxt[n] = n
            q.append(n)
    while q:
        c = q.popleft()
        for par in sorted(parents[c]):
            if par not in nxt:
                nxt[par] = c
                q.append(par)
    edges = sum(len(set(c)) for c in children)
    witness = {
        "power": k,
        "letter": a,
        "pairs": [[list(u), list(v)] for u, v in order],
        "next": {str(n): nxt.get(n) for n in range(len(order))},
    }
    if len(nxt) == len(order):
        return Verdict(Status.PURE_DISCRETE, "balanced", witness, len(order), edges)
    witness["reason"] = "pairs without a path to a coincidence"
    return Verdict(Status.INCONCLUSIVE, "balanced", witness, len(order), edges)


def _inconclusive(reason: str, order, children) -> Verdict:
    edges = sum(len(set(c)) for c in children if c is not None)
    return Verdict(Status.INCONCLUSIVE, "balanced", {"reason": reason, "pairs": len(order)}, len(order), edges)
