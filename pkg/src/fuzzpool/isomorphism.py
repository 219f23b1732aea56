"""Exhaustive graph-isomorphism search for small fuzzy graphs.

Two modes: ``support`` compares adjacency structure only, ``fuzzy``
additionally requires vertex and edge memberships to match within the
shared tolerance. Backtracking with degree/membership pruning keeps the
search fast up to the hard size bound.
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import EPS, FuzzyGraph

#: Hard bound on vertex count for the exhaustive search.
MAX_EXHAUSTIVE = 10


def graphs_isomorphic(g1: FuzzyGraph, g2: FuzzyGraph, mode: str = "support") -> bool:
    """Decide isomorphism by exhaustive bijection search.

    ``mode='support'`` ignores memberships; ``mode='fuzzy'`` requires
    sigma and mu to agree within tolerance under the bijection.
    """
    if mode not in ("support", "fuzzy"):
        raise ValueError(f"mode must be 'support' or 'fuzzy', got {mode!r}")
    n = g1.vertex_count
    if max(n, g2.vertex_count) > MAX_EXHAUSTIVE:
        raise TooLarge(
            f"isomorphism search limited to {MAX_EXHAUSTIVE} vertices"
        )
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    fuzzy = mode == "fuzzy"

    ids1 = sorted(g1.vertices)
    ids2 = sorted(g2.vertices)
    deg1 = {v: len(g1.neighbors(v)) for v in ids1}
    deg2 = {v: len(g2.neighbors(v)) for v in ids2}
    if sorted(deg1.values()) != sorted(deg2.values()):
        return False
    if fuzzy:
        if not _multisets_close(list(g1.vertices.values()), list(g2.vertices.values())):
            return False
        if not _multisets_close(list(g1.edges.values()), list(g2.edges.values())):
            return False

    # Most-constrained-first ordering shrinks the branching factor.
    order = sorted(ids1, key=lambda v: -deg1[v])
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def compatible(v1: str, v2: str) -> bool:
        if deg1[v1] != deg2[v2]:
            return False
        if fuzzy and abs(g1.sigma(v1) - g2.sigma(v2)) > EPS:
            return False
        for u1, m1 in mapping.items():
            has1 = g1.has_edge(v1, u1)
            has2 = g2.has_edge(v2, m1)
            if has1 != has2:
                return False
            if fuzzy and has1 and abs(g1.mu(v1, u1) - g2.mu(v2, m1)) > EPS:
                return False
        return True

    def extend(i: int) -> bool:
        if i == n:
            return True
        v1 = order[i]
        for v2 in ids2:
            if v2 in used or not compatible(v1, v2):
                continue
            mapping[v1] = v2
            used.add(v2)
            if extend(i + 1):
                return True
            del mapping[v1]
            used.remove(v2)
        return False

    return extend(0)


def _multisets_close(a: list[float], b: list[float]) -> bool:
    if len(a) != len(b):
        return False
    a, b = sorted(a), sorted(b)
    return all(abs(x - y) <= EPS for x, y in zip(a, b))
