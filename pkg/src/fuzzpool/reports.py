"""Serialization of experiment reports to a directory of CSV/SVG files.

Emission is deterministic: identical reports produce byte-identical
directories (wall-clock time is deliberately left out of the files).
``parse_report`` reads a directory back into a ``RunReport`` with every
numeric value intact, and the SVG figures can be regenerated from the
CSVs alone.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .experiments import (
    POOLING,
    ConfusionMatrix,
    DecisionGrid,
    ExperimentConfig,
    ModelRun,
    RunReport,
)
from .svg import boundary_chart, line_chart
from .training import MergeStrategy, PoolEvent


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def emit_report(report: RunReport, out_dir: str | Path) -> list[Path]:
    """Write every report file; returns the paths written."""
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, text: str) -> None:
        path = root / name
        _write_atomic(path, text)
        written.append(path)

    emit("report.json", _config_json(report))
    for mode, run in report.runs.items():
        rows = [f"{epoch},{value!r}" for epoch, value in enumerate(run.losses, start=1)]
        emit(f"loss_{mode}.csv", "\n".join(["epoch,loss"] + rows) + "\n")
        emit(f"confusion_{mode}.csv", _confusion_csv(run.confusion))
        emit(f"grid_{mode}.csv", _grid_csv(run.grid))
    emit("pool_events.csv", _events_csv(report))
    for name, text in _render_figures(report):
        emit(name, text)
    emit("report.txt", _summary_text(report))
    return written


def regenerate_figures(out_dir: str | Path) -> list[Path]:
    """Rebuild the SVG files of an emitted report from its CSV/JSON files."""
    root = Path(out_dir)
    report = parse_report(root)
    written = []
    for name, text in _render_figures(report):
        path = root / name
        _write_atomic(path, text)
        written.append(path)
    return written


def parse_report(out_dir: str | Path) -> RunReport:
    """Read an emitted directory back; wall-clock time is not stored."""
    root = Path(out_dir)
    meta = json.loads((root / "report.json").read_text(encoding="utf-8"))
    config = _config_from_dict(meta["config"])
    events = _parse_events(root / "pool_events.csv")
    runs: dict[str, ModelRun] = {}
    for mode in config.modes:
        losses = _parse_losses(root / f"loss_{mode}.csv")
        confusion = _parse_confusion(root / f"confusion_{mode}.csv")
        grid = _parse_grid(root / f"grid_{mode}.csv")
        runs[mode] = ModelRun(
            mode=mode,
            losses=losses,
            events=events if mode == POOLING else [],
            confusion=confusion,
            grid=grid,
            final_hidden_sizes=tuple(meta["final_hidden_sizes"][mode]),
        )
    return RunReport(config, runs, wall_clock_seconds=0.0)


# -- individual file formats ---------------------------------------------


def _config_json(report: RunReport) -> str:
    cfg = report.config
    payload = {
        "config": {
            "dataset": cfg.dataset,
            "dataset_seed": cfg.dataset_seed,
            "dataset_size": cfg.dataset_size,
            "seed": cfg.seed,
            "learning_rate": cfg.learning_rate,
            "epochs": cfg.epochs,
            "pool_interval": cfg.pool_interval,
            "tau": cfg.tau,
            "merge_strategy": cfg.merge_strategy.value,
            "grid_resolution": cfg.grid_resolution,
            "holdout": cfg.holdout,
            "modes": list(cfg.modes),
        },
        "final_hidden_sizes": {
            mode: list(run.final_hidden_sizes) for mode, run in report.runs.items()
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _config_from_dict(d: dict) -> ExperimentConfig:
    return ExperimentConfig(
        dataset=d["dataset"],
        dataset_seed=d["dataset_seed"],
        dataset_size=d["dataset_size"],
        seed=d["seed"],
        learning_rate=d["learning_rate"],
        epochs=d["epochs"],
        pool_interval=d["pool_interval"],
        tau=d["tau"],
        merge_strategy=MergeStrategy(d["merge_strategy"]),
        grid_resolution=d["grid_resolution"],
        holdout=d["holdout"],
        modes=tuple(d["modes"]),
    )


def _events_csv(report: RunReport) -> str:
    lines = ["epoch,layer,i,j,similarity,layer_size_after"]
    run = report.runs.get(POOLING)
    if run is not None:
        lines.extend(
            f"{e.epoch},{e.layer},{e.i},{e.j},{e.similarity!r},{e.layer_size_after}"
            for e in run.events
        )
    return "\n".join(lines) + "\n"


def _parse_events(path: Path) -> list[PoolEvent]:
    lines = path.read_text(encoding="utf-8").splitlines()
    events = []
    for line in lines[1:]:
        epoch, layer, i, j, similarity, size_after = line.split(",")
        events.append(
            PoolEvent(int(epoch), int(layer), int(i), int(j), float(similarity), int(size_after))
        )
    return events


def _parse_losses(path: Path) -> list[float]:
    lines = path.read_text(encoding="utf-8").splitlines()
    return [float(line.split(",")[1]) for line in lines[1:]]


def _confusion_csv(matrix: ConfusionMatrix) -> str:
    c = matrix.counts
    return (
        "actual\\predicted,0,1\n"
        f"0,{c[0][0]},{c[0][1]}\n"
        f"1,{c[1][0]},{c[1][1]}\n"
    )


def _parse_confusion(path: Path) -> ConfusionMatrix:
    lines = path.read_text(encoding="utf-8").splitlines()
    rows = []
    for line in lines[1:]:
        _, a, b = line.split(",")
        rows.append((int(a), int(b)))
    return ConfusionMatrix((rows[0], rows[1]))


def _grid_csv(grid: DecisionGrid) -> str:
    lines = [f"resolution,{grid.resolution}"]
    lines.extend(",".join(str(c) for c in row) for row in grid.cells)
    return "\n".join(lines) + "\n"


def _parse_grid(path: Path) -> DecisionGrid:
    lines = path.read_text(encoding="utf-8").splitlines()
    resolution = int(lines[0].split(",")[1])
    cells = tuple(
        tuple(int(c) for c in line.split(",")) for line in lines[1 : resolution + 1]
    )
    return DecisionGrid(resolution, cells)


def _render_figures(report: RunReport) -> list[tuple[str, str]]:
    dataset = report.config.build_dataset()
    points = [
        (float(x1), float(x2), int(label))
        for (x1, x2), label in zip(dataset.inputs, dataset.labels)
    ]
    out: list[tuple[str, str]] = []
    series = [(mode, run.losses) for mode, run in report.runs.items()]
    out.append(
        (
            "loss_curves.svg",
            line_chart(series, "Loss per epoch", "epoch", "loss"),
        )
    )
    for mode, run in report.runs.items():
        out.append(
            (
                f"boundary_{mode}.svg",
                boundary_chart(run.grid.cells, points, f"Decision boundary ({mode})"),
            )
        )
    return out


def _summary_text(report: RunReport) -> str:
    cfg = report.config
    lines = [
        "experiment summary",
        "==================",
        f"dataset: {cfg.dataset} "
        + (f"(seed {cfg.dataset_seed}, n {cfg.dataset_size})" if cfg.dataset == 2 else "(fixed 100 samples)"),
        f"training seed: {cfg.seed}",
        f"epochs: {cfg.epochs}  learning rate: {cfg.learning_rate!r}",
        f"merge interval: {cfg.pool_interval}  threshold: {cfg.tau!r}  "
        f"strategy: {cfg.merge_strategy.value}",
        f"holdout fraction: {cfg.holdout!r} "
        + ("(evaluation on training data)" if cfg.holdout == 0.0 else ""),
        "",
    ]
    for mode, run in report.runs.items():
        final = run.losses[-1] if run.losses else float("nan")
        lines.append(f"[{mode}]")
        lines.append(f"  final loss: {final!r}")
        lines.append(f"  accuracy: {run.confusion.accuracy!r}")
        lines.append(f"  confusion: {run.confusion.counts}")
        lines.append(f"  hidden sizes: {list(run.final_hidden_sizes)}")
        lines.append(f"  merge events: {len(run.events)}")
        lines.append("")
    return "\n".join(lines)
