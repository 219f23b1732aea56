"""Falsification harnesses for the pooling theorems.

Each suite generates a seeded corpus, checks one claimed property of
vertex pooling, and collects every violation with the graphs needed to
reproduce it. Violations are findings, not test failures: some claims
are expected to hold exactly (commutativity, cycle collapse, closure of
complete graphs), others are genuinely open under the clamping rules
(strong-degree monotonicity, tree preservation) and the harness exists
to answer them empirically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import (
    EdgeClass,
    classify_edge,
    degree_report,
    is_f_tree,
    is_fuzzy_cutvertex,
)
from .errors import InvalidPlan
from .graph import FuzzyGraph, save_graph
from .isomorphism import graphs_isomorphic
from .pooling import pool_cycle, pool_pair, pool_sequence
from .randgen import (
    random_complete_fuzzy,
    random_cycle_graph,
    random_f_tree,
    random_graph,
    random_path_and_cycle_graph,
)

SUITES = ("commutativity", "cycle", "cfg", "strong-degree", "ftree", "edge-order")


@dataclass(frozen=True)
class AuditViolation:
    case: int
    description: str
    graphs: dict[str, FuzzyGraph]


@dataclass
class AuditResult:
    suite: str
    seed: int
    cases: int
    checks: int = 0
    violations: list[AuditViolation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def run_suite(
    suite: str, seed: int, cases: int, out_dir: str | Path | None = None
) -> AuditResult:
    """Run one audit suite; write counterexample graphs when a directory is given."""
    try:
        runner = _RUNNERS[suite]
    except KeyError:
        raise ValueError(f"unknown audit suite {suite!r}; choose from {SUITES}") from None
    result = runner(random.Random(seed), seed, cases)
    if out_dir is not None and result.violations:
        root = Path(out_dir)
        root.mkdir(parents=True, exist_ok=True)
        for violation in result.violations:
            for name, graph in violation.graphs.items():
                path = root / f"{suite}_case{violation.case}_{name}.fg"
                save_graph(graph, path)
    return result


def format_report(result: AuditResult) -> str:
    lines = [
        f"audit suite: {result.suite}",
        f"seed: {result.seed}  cases: {result.cases}  checks: {result.checks}",
        f"violations: {len(result.violations)}",
    ]
    for v in result.violations:
        lines.append(f"  case {v.case}: {v.description}")
    for note in result.notes:
        lines.append(f"note: {note}")
    lines.append("verdict: " + ("all checks passed" if result.ok else "violations found"))
    return "\n".join(lines) + "\n"


def _audit_commutativity(rng: random.Random, seed: int, cases: int) -> AuditResult:
    """Disjoint pair pools must commute up to membership-preserving isomorphism."""
    result = AuditResult("commutativity", seed, cases)
    for case in range(cases):
        g = random_graph(rng, n=rng.randint(4, 8), density=0.5)
        ids = sorted(g.vertices)
        rng.shuffle(ids)
        p, q, r, s = ids[:4]
        one = pool_sequence(g, [(p, q), (r, s)]).graph
        other = pool_sequence(g, [(r, s), (p, q)]).graph
        result.checks += 1
        if not graphs_isomorphic(one, other, mode="fuzzy"):
            result.violations.append(
                AuditViolation(
                    case,
                    f"pool orders ({p},{q})({r},{s}) vs reversed diverge",
                    {"input": g, "order_a": one, "order_b": other},
                )
            )
    return result


def _audit_cycle(rng: random.Random, seed: int, cases: int) -> AuditResult:
    """Collapsing a standalone cycle must land exactly on the cycle strength.

    Also audits the companion claim about pooling a single strong edge of
    a cycle with a pendant vertex attached: if an endpoint is a fuzzy
    cutvertex the result should keep a cycle, otherwise be an f-tree.
    """
    result = AuditResult("cycle", seed, cases)
    for case in range(cases):
        g = random_cycle_graph(rng, rng.randint(4, 8))
        phi = min(g.edges.values())
        pooled = pool_cycle(g, _cycle_vertex_order(g))
        result.checks += 1
        if pooled.graph.vertex_count != 1:
            result.violations.append(
                AuditViolation(case, "cycle did not collapse to one vertex", {"input": g})
            )
            continue
        got = next(iter(pooled.graph.vertices.values()))
        if got != phi:
            result.violations.append(
                AuditViolation(
                    case,
                    f"collapsed membership {got!r} differs from cycle strength {phi!r}",
                    {"input": g, "pooled": pooled.graph},
                )
            )

        finding = _check_cycle_edge_remark(rng, case)
        if finding is not None:
            result.violations.append(finding)
        result.checks += 1
    return result


def _cycle_vertex_order(g: FuzzyGraph) -> list[str]:
    """Trace a standalone cycle starting from its smallest vertex id."""
    adj = g.adjacency()
    start = min(g.vertices)
    order = [start]
    prev = None
    while len(order) < g.vertex_count:
        nxt = [w for w, _ in adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(min(nxt) if len(order) == 1 else nxt[0])
    return order


def _check_cycle_edge_remark(rng: random.Random, case: int) -> AuditViolation | None:
    g = random_cycle_graph(rng, rng.randint(4, 6))
    anchor = min(g.vertices)
    pendant_mu = rng.uniform(0.05, 0.9) * g.sigma(anchor)
    g = g.add_vertex("pend", max(pendant_mu, 0.05))
    g = g.add_edge("pend", anchor, min(pendant_mu, g.sigma("pend"), g.sigma(anchor)))
    alpha_edges = [
        (a, b) for (a, b) in g.edges if classify_edge(g, a, b) is EdgeClass.ALPHA
    ]
    for p, q in alpha_edges:
        cut = is_fuzzy_cutvertex(g, p) or is_fuzzy_cutvertex(g, q)
        pooled = pool_pair(g, p, q).graph
        if cut:
            if not _support_has_cycle(pooled):
                return AuditViolation(
                    case,
                    f"pooling edge ({p},{q}) with cutvertex endpoint lost the cycle",
                    {"remark_input": g, "remark_pooled": pooled},
                )
        elif not is_f_tree(pooled):
            return AuditViolation(
                case,
                f"pooling edge ({p},{q}) without cutvertex endpoint is not an f-tree",
                {"remark_input": g, "remark_pooled": pooled},
            )
    return None


def _support_has_cycle(g: FuzzyGraph) -> bool:
    # A connected support has a cycle iff edges >= vertices.
    positive = sum(1 for m in g.edges.values() if m > 0.0)
    return positive >= g.vertex_count


def _audit_cfg(rng: random.Random, seed: int, cases: int) -> AuditResult:
    """Complete fuzzy graphs: closure under single-edge pools, weakest-edge symmetry."""
    from .analysis import is_complete_fuzzy

    result = AuditResult("cfg", seed, cases)
    fuzzy_mismatches = 0
    for case in range(cases):
        g = random_complete_fuzzy(rng, rng.randint(3, 7))
        for p, q in list(g.edges):
            pooled = pool_pair(g, p, q).graph
            result.checks += 1
            if not is_complete_fuzzy(pooled):
                result.violations.append(
                    AuditViolation(
                        case,
                        f"pooling edge ({p},{q}) broke completeness",
                        {"input": g, "pooled": pooled},
                    )
                )
        weakest = min(g.edges.values())
        weak_edges = [k for k, m in g.edges.items() if m == weakest]
        if len(weak_edges) >= 2:
            (p, q), (r, s) = weak_edges[0], weak_edges[1]
            a = pool_pair(g, p, q).graph
            b = pool_pair(g, r, s).graph
            result.checks += 1
            if not graphs_isomorphic(a, b, mode="support"):
                result.violations.append(
                    AuditViolation(
                        case,
                        f"weakest-edge pools ({p},{q}) vs ({r},{s}) not support-isomorphic",
                        {"input": g, "pool_a": a, "pool_b": b},
                    )
                )
            if not graphs_isomorphic(a, b, mode="fuzzy"):
                fuzzy_mismatches += 1
    if fuzzy_mismatches:
        result.notes.append(
            f"{fuzzy_mismatches} weakest-edge pool pairs support-isomorphic but not "
            "membership-isomorphic (membership multisets may differ)"
        )
    return result


def _audit_strong_degree(rng: random.Random, seed: int, cases: int) -> AuditResult:
    """Does pooling an edge ever raise a surviving vertex's strong degree?"""
    result = AuditResult("strong-degree", seed, cases)
    for case in range(cases):
        g = random_graph(rng, n=rng.randint(3, 7), density=0.55)
        for p, q in list(g.edges):
            pooled = pool_pair(g, p, q).graph
            for v in g.vertices:
                if v in (p, q):
                    continue
                before = degree_report(g, v).strong_degree
                after = degree_report(pooled, v).strong_degree
                result.checks += 1
                if after > before + 1e-12:
                    result.violations.append(
                        AuditViolation(
                            case,
                            f"strong degree of {v!r} rose from {before!r} to {after!r} "
                            f"after pooling ({p},{q})",
                            {"input": g, "pooled": pooled},
                        )
                    )
    return result


def _audit_ftree(rng: random.Random, seed: int, cases: int) -> AuditResult:
    """Does pooling a strongly-dominant edge keep an f-tree an f-tree?"""
    result = AuditResult("ftree", seed, cases)
    for case in range(cases):
        g = random_f_tree(rng, rng.randint(3, 7), extra_edges=rng.randint(0, 2))
        for p, q in list(g.edges):
            if classify_edge(g, p, q) is not EdgeClass.ALPHA:
                continue
            pooled = pool_pair(g, p, q).graph
            result.checks += 1
            if pooled.vertex_count > 1 and not is_f_tree(pooled):
                result.violations.append(
                    AuditViolation(
                        case,
                        f"pooling alpha edge ({p},{q}) left a non-f-tree",
                        {"input": g, "pooled": pooled},
                    )
                )
    return result


def _audit_edge_order(rng: random.Random, seed: int, cases: int) -> AuditResult:
    """Pooling a path set then a cycle set vs the reverse order."""
    result = AuditResult("edge-order", seed, cases)
    fuzzy_mismatches = 0
    for case in range(cases):
        g, path, cycle = random_path_and_cycle_graph(
            rng,
            path_len=rng.randint(2, 3),
            cycle_len=rng.randint(3, 4),
            share_vertex=rng.random() < 0.5,
        )
        path_plan = list(zip(path, path[1:]))
        cycle_plan = list(zip(cycle, cycle[1:]))
        try:
            one = pool_sequence(g, path_plan + cycle_plan).graph
            other = pool_sequence(g, cycle_plan + path_plan).graph
        except InvalidPlan:
            result.notes.append(f"case {case}: plan degenerated, skipped")
            continue
        result.checks += 1
        if not graphs_isomorphic(one, other, mode="support"):
            result.violations.append(
                AuditViolation(
                    case,
                    "pool orders over path+cycle sets not support-isomorphic",
                    {"input": g, "order_a": one, "order_b": other},
                )
            )
        elif not graphs_isomorphic(one, other, mode="fuzzy"):
            fuzzy_mismatches += 1
            result.violations.append(
                AuditViolation(
                    case,
                    "pool orders support-isomorphic but memberships diverge",
                    {"input": g, "order_a": one, "order_b": other},
                )
            )
    if fuzzy_mismatches:
        result.notes.append(
            f"{fuzzy_mismatches} cases kept structure but not memberships"
        )
    return result


_RUNNERS = {
    "commutativity": _audit_commutativity,
    "cycle": _audit_cycle,
    "cfg": _audit_cfg,
    "strong-degree": _audit_strong_degree,
    "ftree": _audit_ftree,
    "edge-order": _audit_edge_order,
}
