"""Vertex pooling: merging vertices of a fuzzy graph.

Pooling two vertices p, q replaces them by a fresh vertex whose
membership is ``min(sigma(p), sigma(q))``. A neighbor of exactly one of
them keeps its edge membership; a common neighbor gets the minimum of
its two edge memberships; any edge between p and q disappears. Carried
memberships are clamped down where they would exceed the new vertex's
membership, so the result is always a valid fuzzy graph.

Sequences of pools compose through a vertex mapping that tracks every
original vertex to its current representative. The collapse operations
(cycle, block, complete subgraph) pool a whole vertex set to a single
vertex whose membership is the weakest element of the collapsed
substructure: the minimum over its vertex memberships and its internal
edge memberships.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .analysis import is_connected, is_complete_fuzzy, is_f_block
from .errors import (
    IdenticalVertices,
    InvalidPlan,
    NotABlock,
    NotACycle,
    NotCompleteFuzzy,
    UnknownVertex,
)
from .graph import FuzzyGraph, edge_key

PoolPlan = Sequence[tuple[str, str]]


@dataclass(frozen=True)
class PoolResult:
    """Pooled graph plus the total map from old vertex ids to new ones.

    ``mapping`` covers every vertex of the input graph; vertices that
    were not pooled map to themselves. ``merged`` is the id of the last
    vertex created (None for an empty plan).
    """

    graph: FuzzyGraph
    mapping: dict[str, str]
    merged: str | None


def merged_vertex_id(p: str, q: str, taken: Iterable[str]) -> str:
    """Deterministic fresh id for the vertex replacing p and q."""
    taken = set(taken)
    base = f"{p}+{q}"
    if base not in taken:
        return base
    k = 2
    while f"{base}~{k}" in taken:
        k += 1
    return f"{base}~{k}"


def pool_pair(g: FuzzyGraph, p: str, q: str) -> PoolResult:
    """Pool two vertices (adjacency not required) into a fresh vertex."""
    sp, sq = g.sigma(p), g.sigma(q)
    if p == q:
        raise IdenticalVertices(f"cannot pool {p!r} with itself")
    sigma_c = min(sp, sq)
    survivors = [v for v in g.vertices if v not in (p, q)]
    vc = merged_vertex_id(p, q, survivors)

    vertices = {v: g.sigma(v) for v in survivors}
    vertices[vc] = sigma_c

    edges: dict[tuple[str, str], float] = {}
    for (a, b), m in g.edges.items():
        if a in (p, q) and b in (p, q):
            continue  # the pooled pair's own edge vanishes
        if a not in (p, q) and b not in (p, q):
            edges[(a, b)] = m

    nbr_p = g.neighbors(p)
    nbr_q = g.neighbors(q)
    for u in set(nbr_p) | set(nbr_q):
        if u in (p, q):
            continue
        if u in nbr_p and u in nbr_q:
            carried = min(nbr_p[u], nbr_q[u])
        elif u in nbr_p:
            carried = nbr_p[u]
        else:
            carried = nbr_q[u]
        edges[edge_key(u, vc)] = min(carried, g.sigma(u), sigma_c)

    mapping = {v: v for v in survivors}
    mapping[p] = vc
    mapping[q] = vc
    return PoolResult(FuzzyGraph(vertices, edges), mapping, vc)


def pool_sequence(g: FuzzyGraph, plan: PoolPlan) -> PoolResult:
    """Fold ``pool_pair`` over a plan given in pre-pool vertex names.

    Each step's endpoints are remapped through the accumulated mapping;
    a step whose endpoints already share a representative is rejected.
    """
    mapping = {v: v for v in g.vertices}
    current = g
    merged: str | None = None
    for step, (p, q) in enumerate(plan):
        if p not in mapping or q not in mapping:
            raise UnknownVertex(f"plan step {step}: unknown vertex in ({p!r}, {q!r})")
        rp, rq = mapping[p], mapping[q]
        if rp == rq:
            raise InvalidPlan(
                f"plan step {step}: {p!r} and {q!r} already share representative {rp!r}"
            )
        result = pool_pair(current, rp, rq)
        current = result.graph
        mapping = {v: result.mapping[rep] for v, rep in mapping.items()}
        merged = result.merged
    return PoolResult(current, mapping, merged)


def _collapse(g: FuzzyGraph, members: Sequence[str], internal_min: float) -> PoolResult:
    """Pool ``members`` to one vertex and pin its membership.

    The fold itself gives the merged vertex the minimum member sigma;
    the collapsed substructure's weakest edge can be lower, so the final
    membership is overridden to ``min(min sigma, internal_min)`` and the
    surviving incident edges are re-clamped against it.
    """
    plan = [(members[0], v) for v in members[1:]]
    folded = pool_sequence(g, plan)
    vc = folded.merged
    assert vc is not None
    sigma_c = min(min(g.sigma(v) for v in members), internal_min)
    vertices = dict(folded.graph.vertices)
    vertices[vc] = sigma_c
    edges = {
        key: (min(m, sigma_c) if vc in key else m)
        for key, m in folded.graph.edges.items()
    }
    return PoolResult(FuzzyGraph(vertices, edges), folded.mapping, vc)


def pool_cycle(g: FuzzyGraph, cycle: Sequence[str]) -> PoolResult:
    """Collapse a cycle subgraph (vertices in cycle order) to one vertex.

    For a standalone cycle the resulting membership equals the cycle's
    strength: the membership of its weakest edge.
    """
    if len(cycle) < 3:
        raise NotACycle("a cycle needs at least three vertices")
    if len(set(cycle)) != len(cycle):
        raise NotACycle(f"repeated vertex in cycle {list(cycle)}")
    closed = list(cycle) + [cycle[0]]
    mus = []
    for a, b in zip(closed, closed[1:]):
        if not g.has_edge(a, b):
            g.sigma(a)
            g.sigma(b)
            raise NotACycle(f"missing cycle edge {a!r}-{b!r}")
        m = g.mu(a, b)
        if m <= 0.0:
            raise NotACycle(f"cycle edge {a!r}-{b!r} has zero membership")
        mus.append(m)
    return _collapse(g, list(cycle), min(mus))


def pool_block(g: FuzzyGraph, block_vertices: Iterable[str]) -> PoolResult:
    """Collapse a vertex set whose induced subgraph is a block."""
    members = sorted(set(block_vertices))
    if len(members) < 2:
        raise NotABlock("block pooling needs at least two vertices")
    sub = g.induced(members)
    if not is_f_block(sub):
        raise NotABlock(f"induced subgraph on {members} is not a block")
    return _collapse(g, members, min(sub.edges.values()))


def pool_complete(g: FuzzyGraph, clique_vertices: Iterable[str]) -> PoolResult:
    """Collapse a vertex set whose induced subgraph is complete fuzzy."""
    members = sorted(set(clique_vertices))
    if len(members) < 2:
        raise NotCompleteFuzzy("complete-subgraph pooling needs at least two vertices")
    sub = g.induced(members)
    if not is_complete_fuzzy(sub) or not is_connected(sub):
        raise NotCompleteFuzzy(f"induced subgraph on {members} is not complete fuzzy")
    return _collapse(g, members, min(sub.edges.values()))


def components(g: FuzzyGraph) -> list[list[str]]:
    """Connected components (positive-membership edges), each sorted."""
    adj = g.adjacency()
    seen: set[str] = set()
    out: list[list[str]] = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w, m in adj[v]:
                if m > 0.0 and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(sorted(comp))
    return out
