"""Command-line interface.

Subcommands::

    fuzzpool analyze --graph FILE
    fuzzpool pool    --graph FILE (--pair p,q | --cycle a,b,c | --block ... | --cfg ...) [--out FILE]
    fuzzpool audit   --suite NAME --seed N --cases N [--out DIR]
    fuzzpool train   --dataset {1,2} --mode {baseline,pooling,both} --seed N ... --out DIR
    fuzzpool report  --in DIR

Exit codes: 0 success, 1 usage error, 2 data/graph error, 3 audit found
violations.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, audits
from .errors import FuzzyGraphError, NetworkError
from .experiments import BASELINE, POOLING, ExperimentConfig, run_experiment
from .graph import load_graph, save_graph, serialize_graph
from .pooling import pool_block, pool_complete, pool_cycle, pool_pair
from .reports import emit_report, regenerate_figures
from .training import MergeStrategy

USAGE_ERROR = 1
DATA_ERROR = 2
AUDIT_VIOLATIONS = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzpool", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="edge classes, bridges, degrees, predicates")
    p.add_argument("--graph", required=True, help="graph file")

    p = sub.add_parser("pool", help="pool vertices of a graph")
    p.add_argument("--graph", required=True, help="graph file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", help="two vertex ids: p,q")
    group.add_argument("--cycle", help="cycle vertices in order: a,b,c,...")
    group.add_argument("--block", help="block vertex set: v1,v2,...")
    group.add_argument("--cfg", help="complete-subgraph vertex set: v1,v2,...")
    p.add_argument("--out", help="write pooled graph here (default: stdout)")

    p = sub.add_parser("audit", help="run a pooling-property audit suite")
    p.add_argument("--suite", required=True, choices=audits.SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--out", help="directory for counterexample graphs")

    p = sub.add_parser("train", help="train baseline/pooling models and emit a report")
    p.add_argument("--dataset", type=int, choices=(1, 2), required=True)
    p.add_argument("--mode", choices=(BASELINE, POOLING, "both"), default="both")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=50_000)
    p.add_argument("--lr", type=float, default=0.025)
    p.add_argument("--pool-interval", type=int, default=10_000)
    p.add_argument("--tau", type=float, default=0.95)
    p.add_argument("--merge", choices=("min", "average"), default="min")
    p.add_argument("--dataset-seed", type=int, default=7)
    p.add_argument("--dataset-size", type=int, default=1000)
    p.add_argument("--holdout", type=float, default=0.0)
    p.add_argument("--out", required=True, help="report directory")

    p = sub.add_parser("report", help="regenerate SVG figures from an emitted report")
    p.add_argument("--in", dest="in_dir", required=True, help="report directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (FuzzyGraphError, NetworkError, OSError, ValueError) as err:
        print(f"fuzzpool: error: {err}", file=sys.stderr)
        return DATA_ERROR


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        return _cmd_analyze(args)
    if args.command == "pool":
        return _cmd_pool(args)
    if args.command == "audit":
        return _cmd_audit(args)
    if args.command == "train":
        return _cmd_train(args)
    if args.command == "report":
        return _cmd_report(args)
    raise AssertionError(f"unhandled command {args.command!r}")


def _cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    print(f"vertices: {g.vertex_count}  edges: {g.edge_count}")
    for vid in sorted(g.vertices):
        report = analysis.degree_report(g, vid)
        print(
            f"vertex {vid}: sigma={g.sigma(vid)!r} degree={report.degree!r} "
            f"strong_degree={report.strong_degree!r}"
        )
    bridges = []
    for (a, b), mu in sorted(g.edges.items()):
        klass = analysis.classify_edge(g, a, b).value
        flag = ""
        if analysis.is_fuzzy_bridge(g, a, b):
            bridges.append((a, b))
            flag = " bridge"
        print(f"edge {a}-{b}: mu={mu!r} class={klass}{flag}")
    cuts = [v for v in sorted(g.vertices) if analysis.is_fuzzy_cutvertex(g, v)]
    print(f"fuzzy bridges: {len(bridges)}")
    print(f"fuzzy cutvertices: {' '.join(cuts) if cuts else '(none)'}")
    print(f"connected: {analysis.is_connected(g)}")
    print(f"f-tree: {analysis.is_f_tree(g)}")
    print(f"f-block: {analysis.is_f_block(g)}")
    print(f"complete fuzzy: {analysis.is_complete_fuzzy(g)}")
    return 0


def _split_ids(raw: str) -> list[str]:
    ids = [token.strip() for token in raw.split(",") if token.strip()]
    if len(ids) < 2:
        raise ValueError(f"need at least two comma-separated vertex ids, got {raw!r}")
    return ids


def _cmd_pool(args) -> int:
    g = load_graph(args.graph)
    if args.pair:
        ids = _split_ids(args.pair)
        if len(ids) != 2:
            raise ValueError("--pair takes exactly two vertex ids")
        result = pool_pair(g, ids[0], ids[1])
    elif args.cycle:
        result = pool_cycle(g, _split_ids(args.cycle))
    elif args.block:
        result = pool_block(g, _split_ids(args.block))
    else:
        result = pool_complete(g, _split_ids(args.cfg))
    for old in sorted(result.mapping):
        new = result.mapping[old]
        if old != new:
            print(f"{old} -> {new}")
    if args.out:
        save_graph(result.graph, args.out)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(serialize_graph(result.graph))
    return 0


def _cmd_audit(args) -> int:
    result = audits.run_suite(args.suite, args.seed, args.cases, out_dir=args.out)
    sys.stdout.write(audits.format_report(result))
    if args.out and result.violations:
        print(f"counterexample graphs written to {args.out}")
    return 0 if result.ok else AUDIT_VIOLATIONS


def _cmd_train(args) -> int:
    modes = (BASELINE, POOLING) if args.mode == "both" else (args.mode,)
    config = ExperimentConfig(
        dataset=args.dataset,
        dataset_seed=args.dataset_seed,
        dataset_size=args.dataset_size,
        seed=args.seed,
        learning_rate=args.lr,
        epochs=args.epochs,
        pool_interval=args.pool_interval,
        tau=args.tau,
        merge_strategy=MergeStrategy(args.merge),
        holdout=args.holdout,
        modes=modes,
    )
    report = run_experiment(config)
    emit_report(report, args.out)
    for mode, run in report.runs.items():
        final = run.losses[-1] if run.losses else float("nan")
        print(
            f"{mode}: final loss {final:.8f}, accuracy {run.confusion.accuracy:.4f}, "
            f"hidden sizes {list(run.final_hidden_sizes)}, {len(run.events)} merges"
        )
    print(f"report written to {args.out} ({report.wall_clock_seconds:.1f}s)")
    return 0


def _cmd_report(args) -> int:
    written = regenerate_figures(args.in_dir)
    for path in written:
        print(f"regenerated {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
