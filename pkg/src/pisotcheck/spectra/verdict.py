"""Decide overlap coincidence and produce checkable witnesses."""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import networkx as nx

from ..substitution import Substitution
from .overlap import (
    DEFAULT_CAPS,
    Caps,
    Overlap,
    OverlapGraph,
    build_overlap_graph,
    overlap_children,
    overlap_length,
)
from .suspension import SuspensionTiling, vadd


class Status(str, Enum):
    PURE_DISCRETE = "PureDiscrete"
    NOT_PURE_DISCRETE = "NotPureDiscrete"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class Verdict:
    status: Status
    method: str
    witness: dict[str, Any]
    nodes: int = 0
    edges: int = 0
    scc_size: int = 0
    graph: OverlapGraph | None = field(default=None, repr=False)
    component: list[int] | None = field(default=None, repr=False)

    def witness_digest(self) -> str:
        blob = json.dumps(self.witness, sort_keys=True, separators=(",", ":"), default=str)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def record(self, rec_id=None, runtime_ms: int | None = None) -> dict:
        return {
            "id": rec_id,
            "status": self.status.value,
            "method": self.method,
            "nodes": self.nodes,
            "edges": self.edges,
            "scc_size": self.scc_size,
            "witness_digest": self.witness_digest(),
            "runtime_ms": runtime_ms,
        }


def _node_json(o: Overlap) -> list:
    return [o.i, o.j, list(o.x)]


def coincidence_paths(g: OverlapGraph) -> dict[int, int]:
    """For each node reaching a coincidence, the next node on a shortest path to one."""
    parents: dict[int, list[int]] = {k: [] for k in range(len(g.nodes))}
    for k, kids in enumerate(g.children):
        for c in set(kids or ()):
            parents[c].append(k)
    nxt: dict[int, int] = {}
    q = deque()
    for k in g.coincidence_nodes():
        nxt[k] = k
        q.append(k)
    while q:
        c = q.popleft()
        for par in sorted(parents[c]):
            if par not in nxt:
                nxt[par] = c
                q.append(par)
    return nxt


def certify_component(g: OverlapGraph, comp: list[int]) -> bool:
    """Exact check that overlap lengths form a beta-eigenvector on ``comp``.

    For a strongly connected nonnegative matrix a positive eigenvector pins
    the spectral radius, so this certifies spectral radius beta.
    """
    t = g.tiling
    members = set(comp)
    for k in comp:
        if g.nodes[k].is_coincidence():
            return False
        total = t.zero
        for c in g.children[k]:
            if c in members:
                total = vadd(total, overlap_length(t, g.nodes[c]))
        target = t.field.mul_beta(overlap_length(t, g.nodes[k]))
        if total != target:
            return False
    return True


def bottom_components(g: OverlapGraph, bad: set[int]) -> list[list[int]]:
    D = nx.DiGraph()
    D.add_nodes_from(bad)
    for k in bad:
        for c in g.children[k]:
            D.add_edge(k, c)
    C = nx.condensation(D)
    comps = []
    for n in C.nodes:
        if C.out_degree(n) == 0:
            comps.append(sorted(C.nodes[n]["members"]))
    comps.sort(key=lambda comp: (len(comp), [g.nodes[k] for k in comp]))
    return comps


def overlap_check(t: SuspensionTiling, caps: Caps = DEFAULT_CAPS, order: str = "bfs", oriented: bool = False) -> Verdict:
    g = build_overlap_graph(t, caps=caps, order=order, oriented=oriented)
    n, e = len(g.nodes), g.edge_count
    if not g.complete:
        return Verdict(Status.INCONCLUSIVE, "overlap", {"reason": "max_nodes", "nodes": n, "edges": e}, n, e, 0, g)
    nxt = coincidence_paths(g)
    if len(nxt) == n:
        steps = {str(k): nxt[k] for k in range(n)}
        witness = {"nodes": [_node_json(o) for o in g.nodes], "next": steps}
        return Verdict(Status.PURE_DISCRETE, "overlap", witness, n, e, 0, g)
    bad = {k for k in range(n) if k not in nxt}
    for comp in bottom_components(g, bad):
        if certify_component(g, comp):
            witness = {
                "component": [_node_json(g.nodes[k]) for k in comp],
                "lengths": [list(overlap_length(t, g.nodes[k])) for k in comp],
                "beta_min_poly": list(t.field.min_poly.coeffs),
            }
            return Verdict(Status.NOT_PURE_DISCRETE, "overlap", witness, n, e, len(comp), g, comp)
    raise AssertionError("closed non-coincident set without a certified component")


def verify_pure_discrete_witness(v: Verdict) -> bool:
    """Every node follows its pointer chain to a coincidence along graph edges."""
    g = v.graph
    nxt = {int(k): c for k, c in v.witness["next"].items()}
    for k in range(len(g.nodes)):
        seen = set()
        cur = k
        while not g.nodes[cur].is_coincidence():
            if cur in seen:
                return False
            seen.add(cur)
            step = nxt[cur]
            if step not in g.children[cur]:
                return False
            cur = step
    return True


def oriented_lift(v: Verdict) -> tuple[list[Overlap], list[list[int]]]:
    """Both orientations of every component node, with ordered in-component children.

    Node 2k is the k-th component overlap as stored and 2k + 1 its swap.
    """
    if v.status != Status.NOT_PURE_DISCRETE or v.component is None:
        raise ValueError("verdict has no non-coincident component")
    g = v.graph
    t = g.tiling
    nodes = []
    for k in v.component:
        o = g.nodes[k]
        nodes += [o, o.swapped()]
    index = {o: n for n, o in enumerate(nodes)}
    children = [[index[c] for c in overlap_children(t, o, oriented=True) if c in index] for o in nodes]
    return nodes, children


def orientation_quotient(signs: list[int], children: list[list[int]]) -> list[int]:
    """Coarsest partition refining ``signs`` that is stable under ordered children.

    Returns a class id per node, numbered by first occurrence.
    """
    cls = _renumber(signs)
    while True:
        new = _renumber([(cls[k], tuple(cls[c] for c in kids)) for k, kids in enumerate(children)])
        if max(new) == max(cls):
            return new
        cls = new


def _renumber(keys: list) -> list[int]:
    ids: dict = {}
    return [ids.setdefault(key, len(ids)) for key in keys]


def extract_noncoincident_component(v: Verdict) -> Substitution:
    """The non-coincident component as a substitution on its oriented overlap types.

    Each component node is taken in both orientations, each oriented overlap
    maps to its in-component children left to right, and oriented overlaps
    with the same orientation and the same future are merged.  Letters are
    numbered by first occurrence along the component order.
    """
    nodes, children = oriented_lift(v)
    t = v.graph.tiling
    cls = orientation_quotient([t.sign(o.x) for o in nodes], children)
    rep: dict[int, int] = {}
    for k, c in enumerate(cls):
        rep.setdefault(c, k)
    return Substitution(tuple(tuple(cls[c] + 1 for c in children[rep[c]]) for c in range(len(rep))))
