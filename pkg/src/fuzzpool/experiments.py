"""Experiment orchestration: baseline vs merging model on one dataset.

An experiment trains two models from the same seed, one with the
merging schedule disabled and one with it enabled, then evaluates both
with a confusion matrix and a decision grid over the unit square.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .datasets import Dataset, dataset1, dataset2
from .errors import ShapeMismatch
from .network import Network, forward_batch
from .training import MergeStrategy, PoolEvent, TrainConfig, TrainResult, train

BASELINE = "baseline"
POOLING = "pooling"


@dataclass(frozen=True)
class ExperimentConfig:
    dataset: int = 1
    dataset_seed: int = 7
    dataset_size: int = 1000
    seed: int = 0
    learning_rate: float = 0.025
    epochs: int = 50_000
    pool_interval: int = 10_000
    tau: float = 0.95
    merge_strategy: MergeStrategy = MergeStrategy.FUZZY_MIN
    grid_resolution: int = 100
    holdout: float = 0.0
    modes: tuple[str, ...] = (BASELINE, POOLING)

    def __post_init__(self):
        if self.dataset not in (1, 2):
            raise ValueError("dataset must be 1 or 2")
        if not 0.0 <= self.holdout < 1.0:
            raise ValueError("holdout fraction must lie in [0, 1)")
        bad = [m for m in self.modes if m not in (BASELINE, POOLING)]
        if bad:
            raise ValueError(f"unknown modes {bad}")

    def train_config(self, mode: str) -> TrainConfig:
        return TrainConfig(
            seed=self.seed,
            learning_rate=self.learning_rate,
            epochs=self.epochs,
            pool_interval=self.pool_interval,
            tau=self.tau,
            merge_strategy=self.merge_strategy,
            pooling_enabled=(mode == POOLING),
        )

    def build_dataset(self) -> Dataset:
        if self.dataset == 1:
            return dataset1()
        return dataset2(self.dataset_seed, self.dataset_size)


@dataclass(frozen=True)
class ConfusionMatrix:
    """counts[actual][predicted] over a labeled dataset."""

    counts: tuple[tuple[int, int], tuple[int, int]]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def accuracy(self) -> float:
        return (self.counts[0][0] + self.counts[1][1]) / self.total

    @property
    def diagonal(self) -> bool:
        return self.counts[0][1] == 0 and self.counts[1][0] == 0


@dataclass(frozen=True)
class DecisionGrid:
    """Predicted class at the center of each cell of an r x r grid."""

    resolution: int
    cells: tuple[tuple[int, ...], ...]  # cells[i][j] at ((i+.5)/r, (j+.5)/r)


@dataclass(frozen=True)
class ModelRun:
    mode: str
    losses: list[float]
    events: list[PoolEvent]
    confusion: ConfusionMatrix
    grid: DecisionGrid
    final_hidden_sizes: tuple[int, ...]


@dataclass
class RunReport:
    config: ExperimentConfig
    runs: dict[str, ModelRun]
    wall_clock_seconds: float = 0.0


def predictions(net: Network, inputs: np.ndarray) -> np.ndarray:
    """Predicted class per row: index of the larger output unit."""
    if net.layer_sizes[-1] != 2:
        raise ShapeMismatch("classification needs a 2-unit output layer")
    out = forward_batch(net, inputs)[-1]
    return np.argmax(out, axis=1)


def confusion(net: Network, dataset: Dataset) -> ConfusionMatrix:
    pred = predictions(net, dataset.inputs)
    counts = [[0, 0], [0, 0]]
    for actual, predicted in zip(dataset.labels, pred):
        counts[int(actual)][int(predicted)] += 1
    return ConfusionMatrix(tuple(tuple(row) for row in counts))


def decision_grid(net: Network, resolution: int = 100) -> DecisionGrid:
    if resolution < 1:
        raise ValueError("resolution must be positive")
    centers = (np.arange(resolution) + 0.5) / resolution
    xs, ys = np.meshgrid(centers, centers, indexing="ij")
    points = np.column_stack([xs.ravel(), ys.ravel()])
    pred = predictions(net, points).reshape(resolution, resolution)
    return DecisionGrid(resolution, tuple(tuple(int(c) for c in row) for row in pred))


def run_experiment(config: ExperimentConfig) -> RunReport:
    """Train every requested mode from one seed and collect its metrics."""
    started = time.perf_counter()
    data = config.build_dataset()
    if config.holdout > 0.0:
        cut = len(data) - int(round(config.holdout * len(data)))
        train_data = data.subset(slice(0, cut))
        eval_data = data.subset(slice(cut, len(data)))
    else:
        train_data = data
        eval_data = data
    runs: dict[str, ModelRun] = {}
    for mode in config.modes:
        result: TrainResult = train(config.train_config(mode), train_data)
        runs[mode] = ModelRun(
            mode=mode,
            losses=result.losses,
            events=result.events,
            confusion=confusion(result.network, eval_data),
            grid=decision_grid(result.network, config.grid_resolution),
            final_hidden_sizes=tuple(result.network.hidden_sizes),
        )
    return RunReport(config, runs, wall_clock_seconds=time.perf_counter() - started)
