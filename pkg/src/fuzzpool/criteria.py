"""Pluggable pooling criteria and the hereditary audit.

A criterion is a named pure predicate over fuzzy graphs. Built in:
a connectivity-threshold criterion (every vertex pair connected at or
above a threshold). The hereditary audit enumerates every pooling
sequence up to a depth bound and reports each pooled graph where the
predicate stops holding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .analysis import connectivity_matrix
from .graph import FuzzyGraph
from .pooling import pool_pair


@dataclass(frozen=True)
class Criteria:
    """Named pure predicate over fuzzy graphs."""

    name: str
    predicate: Callable[[FuzzyGraph], bool]


def check_criteria(c: Criteria, g: FuzzyGraph) -> bool:
    return bool(c.predicate(g))


def conn_at_least(threshold: float) -> Criteria:
    """Every vertex pair connected with strength >= threshold."""

    def predicate(g: FuzzyGraph) -> bool:
        ids, m = connectivity_matrix(g)
        n = len(ids)
        for i in range(n):
            for j in range(i + 1, n):
                if m[i, j] < threshold:
                    return False
        return True

    return Criteria(name=f"conn>={threshold!r}", predicate=predicate)


@dataclass(frozen=True)
class HereditaryCounterexample:
    """A pooling sequence leading from a satisfying graph to a failing one."""

    plan: tuple[tuple[str, str], ...]
    graph: FuzzyGraph


def audit_hereditary(
    c: Criteria, g: FuzzyGraph, depth: int = 2
) -> list[HereditaryCounterexample]:
    """All pooling sequences up to ``depth`` that break the criterion.

    Returns the empty list when the criterion is hereditary on ``g`` up
    to the bound (or vacuously, when ``g`` itself fails it). Sequences
    are only extended through graphs that still satisfy the criterion,
    so every counterexample records the first failing step.
    """
    if depth < 0 or depth > 3:
        raise ValueError("hereditary audit depth must be between 0 and 3")
    if not check_criteria(c, g):
        return []
    found: list[HereditaryCounterexample] = []
    frontier: list[tuple[tuple[tuple[str, str], ...], FuzzyGraph]] = [((), g)]
    for _ in range(depth):
        next_frontier = []
        for plan, cur in frontier:
            for p, q in itertools.combinations(sorted(cur.vertices), 2):
                pooled = pool_pair(cur, p, q).graph
                step_plan = plan + ((p, q),)
                if check_criteria(c, pooled):
                    next_frontier.append((step_plan, pooled))
                else:
                    found.append(HereditaryCounterexample(step_plan, pooled))
        frontier = next_frontier
    return found
