"""Connectivity analytics for fuzzy graphs.

The central quantity is the max-min connectivity strength: the strength
of a path is the membership of its weakest edge, and the connectivity
strength of a vertex pair is the best such strength over all paths
between them. Edge classes, bridges, cutvertices, strong degrees and the
structural predicates below are all defined in terms of it.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import IdenticalVertices, InvalidPath, UnknownEdge
from .graph import EPS, FuzzyGraph


class EdgeClass(Enum):
    """Trichotomy of an edge against the rest of the graph.

    An edge is compared with the best alternative route between its
    endpoints: stronger (alpha), equal (beta) or weaker (delta). Alpha
    and beta edges are the strong edges.
    """

    ALPHA = "alpha"
    BETA = "beta"
    DELTA = "delta"


@dataclass(frozen=True)
class DegreeReport:
    """Degree facts for one vertex: plain degree plus strong-edge share."""

    vertex: str
    degree: float
    strong_degree: float
    strong_neighbors: frozenset[str]


def path_strength(g: FuzzyGraph, path: Sequence[str]) -> float:
    """Minimum edge membership along ``path`` (a vertex sequence).

    The path must have at least two distinct vertices and every
    consecutive pair must be an edge with positive membership.
    """
    if len(path) < 2:
        raise InvalidPath("path needs at least two vertices")
    if len(set(path)) != len(path):
        raise InvalidPath(f"repeated vertex in path {list(path)}")
    strength = math.inf
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            g.sigma(a)
            g.sigma(b)
            raise InvalidPath(f"missing edge {a!r}-{b!r}")
        m = g.mu(a, b)
        if m <= 0.0:
            raise InvalidPath(f"edge {a!r}-{b!r} has zero membership")
        strength = min(strength, m)
    return strength


def connectivity_strength(g: FuzzyGraph, p: str, q: str) -> float:
    """Best max-min path strength between ``p`` and ``q``; 0 if no path.

    Widest-path relaxation with a max-heap; equals exhaustive
    enumeration of simple paths because max-min admits greedy optimal
    substructure.
    """
    g.sigma(p)
    g.sigma(q)
    if p == q:
        raise IdenticalVertices("connectivity strength needs two distinct vertices")
    adj = g.adjacency()
    best = {p: math.inf}
    heap = [(-math.inf, p)]
    while heap:
        neg, v = heapq.heappop(heap)
        cur = -neg
        if cur < best.get(v, 0.0):
            continue
        if v == q:
            return cur
        for w, m in adj[v]:
            if m <= 0.0:
                continue
            cand = min(cur, m)
            if cand > best.get(w, 0.0):
                best[w] = cand
                heapq.heappush(heap, (-cand, w))
    return 0.0


def connectivity_matrix(g: FuzzyGraph) -> tuple[list[str], np.ndarray]:
    """All-pairs connectivity strengths via max-min closure.

    Returns the sorted vertex order and the symmetric matrix (diagonal
    fixed at 1.0, never meaningful).
    """
    ids = sorted(g.vertices)
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    m = np.zeros((n, n))
    np.fill_diagonal(m, 1.0)
    for (a, b), mu in g.edges.items():
        if mu > 0.0:
            m[index[a], index[b]] = mu
            m[index[b], index[a]] = mu
    for k in range(n):
        np.maximum(m, np.minimum(m[:, k, None], m[None, k, :]), out=m)
    return ids, m


def classify_edge(g: FuzzyGraph, p: str, q: str) -> EdgeClass:
    """Compare mu(pq) with the best alternative route between p and q."""
    m = g.mu(p, q)
    alt = connectivity_strength(g.remove_edge(p, q), p, q)
    if m > alt + EPS:
        return EdgeClass.ALPHA
    if m < alt - EPS:
        return EdgeClass.DELTA
    return EdgeClass.BETA


def is_strong_edge(g: FuzzyGraph, p: str, q: str) -> bool:
    return classify_edge(g, p, q) is not EdgeClass.DELTA


def is_fuzzy_bridge(g: FuzzyGraph, p: str, q: str) -> bool:
    """True iff deleting edge pq strictly lowers some pair's connectivity."""
    if not g.has_edge(p, q):
        raise UnknownEdge(f"no edge between {p!r} and {q!r}")
    _, before = connectivity_matrix(g)
    _, after = connectivity_matrix(g.remove_edge(p, q))
    return bool(np.any(before - after > EPS))


def is_fuzzy_cutvertex(g: FuzzyGraph, v: str) -> bool:
    """True iff deleting vertex v strictly lowers some pair's connectivity."""
    g.sigma(v)
    ids, before = connectivity_matrix(g)
    sub_ids, after = connectivity_matrix(g.remove_vertex(v))
    keep = [ids.index(u) for u in sub_ids]
    return bool(np.any(before[np.ix_(keep, keep)] - after > EPS))


def degree_report(g: FuzzyGraph, v: str) -> DegreeReport:
    """Degree, strong degree and strong neighbor set of one vertex."""
    nbrs = g.neighbors(v)
    degree = sum(nbrs.values())
    strong = {u for u in nbrs if is_strong_edge(g, v, u)}
    strong_degree = sum(nbrs[u] for u in strong)
    return DegreeReport(v, degree, strong_degree, frozenset(strong))


def min_degree(g: FuzzyGraph) -> float:
    return min((degree_report(g, v).degree for v in g.vertices), default=0.0)


def max_degree(g: FuzzyGraph) -> float:
    return max((degree_report(g, v).degree for v in g.vertices), default=0.0)


def is_connected(g: FuzzyGraph) -> bool:
    """Every vertex pair joined by a path of positive-membership edges."""
    if g.vertex_count <= 1:
        return True
    adj = g.adjacency()
    start = next(iter(g.vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, m in adj[v]:
            if m > 0.0 and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def is_complete_fuzzy(g: FuzzyGraph) -> bool:
    """Every pair adjacent with mu equal to the smaller endpoint sigma."""
    ids = sorted(g.vertices)
    for i, p in enumerate(ids):
        for q in ids[i + 1 :]:
            if not g.has_edge(p, q):
                return False
            if abs(g.mu(p, q) - min(g.sigma(p), g.sigma(q))) > EPS:
                return False
    return True


def maximum_spanning_tree(g: FuzzyGraph) -> set[tuple[str, str]]:
    """Kruskal over positive-membership edges, ties broken by endpoint order.

    Returns the selected edge keys; a spanning tree when the graph is
    connected, otherwise a spanning forest.
    """
    parent = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    chosen: set[tuple[str, str]] = set()
    candidates = sorted(
        ((m, k) for k, m in g.edges.items() if m > 0.0),
        key=lambda item: (-item[0], item[1]),
    )
    for m, (a, b) in candidates:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            chosen.add((a, b))
    return chosen


def is_f_tree(g: FuzzyGraph) -> bool:
    """True iff some spanning tree strictly dominates every non-tree edge.

    The maximum spanning tree maximizes the min-edge along every tree
    path, so checking it alone decides the existential definition.
    Disconnected graphs are never trees here.
    """
    if not is_connected(g):
        return False
    tree = maximum_spanning_tree(g)
    rest = [k for k in g.edges if k not in tree]
    if not rest:
        return True
    tree_adj: dict[str, list[tuple[str, float]]] = {v: [] for v in g.vertices}
    for a, b in tree:
        m = g.mu(a, b)
        tree_adj[a].append((b, m))
        tree_adj[b].append((a, m))
    for p, q in rest:
        if _tree_path_strength(tree_adj, p, q) <= g.edges[(p, q)]:
            return False
    return True


def _tree_path_strength(
    tree_adj: dict[str, list[tuple[str, float]]], p: str, q: str
) -> float:
    stack = [(p, math.inf)]
    seen = {p}
    while stack:
        v, cur = stack.pop()
        if v == q:
            return cur
        for w, m in tree_adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append((w, min(cur, m)))
    return 0.0


def is_f_block(g: FuzzyGraph) -> bool:
    """Connected and free of fuzzy cutvertices."""
    if not is_connected(g):
        return False
    return not any(is_fuzzy_cutvertex(g, v) for v in g.vertices)
