"""Seeded random fuzzy-graph builders for audits and property tests.

All builders take a ``random.Random`` so corpora are reproducible from a
single seed. Edge memberships always respect the fuzzy-graph inequality
by construction.
"""

from __future__ import annotations

import random
from typing import Sequence

from .graph import FuzzyGraph


def _ids(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def random_graph(
    rng: random.Random,
    n: int | None = None,
    max_n: int = 8,
    density: float = 0.5,
    connected: bool = False,
) -> FuzzyGraph:
    """Random graph with uniform sigma and edges below the endpoint cap."""
    if n is None:
        n = rng.randint(2, max_n)
    ids = _ids(n)
    sigma = {v: rng.uniform(0.1, 1.0) for v in ids}
    edges: dict[tuple[str, str], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                cap = min(sigma[ids[i]], sigma[ids[j]])
                edges[(ids[i], ids[j])] = rng.uniform(0.05, 1.0) * cap
    if connected:
        order = ids[:]
        rng.shuffle(order)
        for a, b in zip(order, order[1:]):
            key = (a, b) if a <= b else (b, a)
            if key not in edges:
                cap = min(sigma[a], sigma[b])
                edges[key] = rng.uniform(0.05, 1.0) * cap
    return FuzzyGraph(sigma, edges)


def random_cycle_graph(rng: random.Random, length: int) -> FuzzyGraph:
    """Standalone cycle: edge memberships first, sigmas at or above them."""
    ids = _ids(length)
    mus = [rng.uniform(0.05, 0.95) for _ in range(length)]
    sigma = {}
    for i, v in enumerate(ids):
        incident = (mus[i - 1], mus[i])
        sigma[v] = rng.uniform(max(incident), 1.0)
    edges = {}
    for i in range(length):
        a, b = ids[i], ids[(i + 1) % length]
        key = (a, b) if a <= b else (b, a)
        edges[key] = mus[i]
    return FuzzyGraph(sigma, edges)


def random_complete_fuzzy(rng: random.Random, n: int) -> FuzzyGraph:
    """Complete fuzzy graph: every mu equals the smaller endpoint sigma."""
    ids = _ids(n)
    sigma = {v: rng.uniform(0.1, 1.0) for v in ids}
    edges = {
        (ids[i], ids[j]): min(sigma[ids[i]], sigma[ids[j]])
        for i in range(n)
        for j in range(i + 1, n)
    }
    return FuzzyGraph(sigma, edges)


def random_f_tree(rng: random.Random, n: int, extra_edges: int = 2) -> FuzzyGraph:
    """Random tree plus non-tree edges strictly weaker than their tree path.

    The construction guarantees the tree-domination property, so the
    result is always an f-tree.
    """
    ids = _ids(n)
    sigma = {v: rng.uniform(0.3, 1.0) for v in ids}
    edges: dict[tuple[str, str], float] = {}
    tree_adj: dict[str, list[tuple[str, float]]] = {v: [] for v in ids}
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = ids[i], ids[j]
        mu = rng.uniform(0.2, 1.0) * min(sigma[a], sigma[b])
        edges[(a, b) if a <= b else (b, a)] = mu
        tree_adj[a].append((b, mu))
        tree_adj[b].append((a, mu))

    def tree_strength(p: str, q: str) -> float:
        stack = [(p, float("inf"))]
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

    attempts = 0
    added = 0
    while added < extra_edges and attempts < 20 * (extra_edges + 1):
        attempts += 1
        a, b = rng.sample(ids, 2)
        key = (a, b) if a <= b else (b, a)
        if key in edges:
            continue
        bound = min(tree_strength(a, b), sigma[a], sigma[b])
        if bound <= 0.01:
            continue
        edges[key] = rng.uniform(0.2, 0.95) * bound
        added += 1
    return FuzzyGraph(sigma, edges)


def random_path_and_cycle_graph(
    rng: random.Random,
    path_len: int,
    cycle_len: int,
    share_vertex: bool,
) -> tuple[FuzzyGraph, list[str], list[str]]:
    """Graph containing a vertex path and a cycle, edge-disjoint.

    When ``share_vertex`` is true the cycle starts at the path's last
    vertex; otherwise the two structures are vertex-disjoint. A few
    background vertices and edges pad the ambient graph. Returns the
    graph plus the path and cycle vertex sequences.
    """
    path = [f"p{i}" for i in range(path_len)]
    first_cycle = [path[-1]] if share_vertex else [f"c{0}"]
    cycle = first_cycle + [f"c{i}" for i in range(1, cycle_len)]
    outside = [f"o{i}" for i in range(rng.randint(1, 2))]
    ids = list(dict.fromkeys(path + cycle + outside))
    sigma = {v: rng.uniform(0.4, 1.0) for v in ids}
    edges: dict[tuple[str, str], float] = {}

    def put(a: str, b: str) -> None:
        key = (a, b) if a <= b else (b, a)
        if key not in edges:
            edges[key] = rng.uniform(0.1, 1.0) * min(sigma[a], sigma[b])

    for a, b in zip(path, path[1:]):
        put(a, b)
    closed = cycle + [cycle[0]]
    for a, b in zip(closed, closed[1:]):
        put(a, b)
    for o in outside:
        put(o, rng.choice(path + cycle))
    return FuzzyGraph(sigma, edges), path, cycle
