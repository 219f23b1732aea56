"""Training loop with periodic similarity-driven neuron merging.

Every ``pool_interval`` epochs the hidden-layer activation vectors are
compared pairwise by cosine similarity; pairs above the threshold are
merged, shrinking the layer by one neuron per merge. Two merge rules
ship: ``min`` keeps, element-wise, the weight of smaller magnitude
(the fuzzy-minimum reading extended to signed reals) and ``average``
takes the mean of incoming weights while summing outgoing ones, which
leaves the network function unchanged for exactly duplicated neurons.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .datasets import Dataset
from .errors import (
    EmptyDataset,
    IndexOutOfRange,
    LengthMismatch,
    NotHiddenLayer,
)
from .graph import FuzzyGraph
from .network import Network, forward_batch, init_network, train_epoch


class MergeStrategy(Enum):
    FUZZY_MIN = "min"
    AVERAGE = "average"


@dataclass(frozen=True)
class TrainConfig:
    seed: int = 0
    learning_rate: float = 0.025
    epochs: int = 50_000
    pool_interval: int = 10_000
    tau: float = 0.95
    merge_strategy: MergeStrategy = MergeStrategy.FUZZY_MIN
    pooling_enabled: bool = True
    layer_sizes: tuple[int, ...] = (2, 8, 8, 2)

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if self.epochs < 0:
            raise ValueError("epochs must be non-negative")
        if self.pool_interval < 1:
            raise ValueError("pool_interval must be at least 1")
        if not 0.0 < self.tau <= 1.0:
            raise ValueError("tau must lie in (0, 1]")


@dataclass(frozen=True)
class PoolEvent:
    """One neuron merge: where, which pair, how similar, size afterwards."""

    epoch: int
    layer: int
    i: int
    j: int
    similarity: float
    layer_size_after: int


@dataclass(frozen=True)
class TrainResult:
    network: Network
    losses: list[float]  # entry k is the loss going into epoch k+1
    events: list[PoolEvent]


def cosine_similarity(u: np.ndarray, v: np.ndarray) -> float:
    """dot(u, v) / (|u| |v|); zero-norm vectors are similar to nothing."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1 or u.size < 1:
        raise LengthMismatch(f"need equal-length vectors, got {u.shape} and {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def collect_activations(net: Network, dataset: Dataset) -> list[np.ndarray]:
    """Per hidden layer, the (n_samples x layer_size) activation matrix."""
    if len(dataset) == 0:
        raise EmptyDataset("no samples to collect activations over")
    return forward_batch(net, dataset.inputs)[1:-1]


def signed_min(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Element of smaller magnitude, sign kept; ties take the first operand."""
    return np.where(np.abs(a) <= np.abs(b), a, b)


def merge_neurons(
    net: Network, layer: int, i: int, j: int, strategy: MergeStrategy
) -> Network:
    """Merge hidden neurons i and j (i < j) of ``layer`` into one."""
    if not 1 <= layer <= len(net.layer_sizes) - 2:
        raise NotHiddenLayer(f"layer {layer} is not a hidden layer")
    size = net.layer_sizes[layer]
    if not 0 <= i < j < size:
        raise IndexOutOfRange(f"bad neuron pair ({i}, {j}) for layer of size {size}")

    w_in = net.weights[layer - 1]
    b_in = net.biases[layer - 1]
    w_out = net.weights[layer]
    if strategy is MergeStrategy.FUZZY_MIN:
        row = signed_min(w_in[i], w_in[j])
        bias = b_in[i] if abs(b_in[i]) <= abs(b_in[j]) else b_in[j]
        col = signed_min(w_out[:, i], w_out[:, j])
    elif strategy is MergeStrategy.AVERAGE:
        row = (w_in[i] + w_in[j]) / 2.0
        bias = (b_in[i] + b_in[j]) / 2.0
        col = w_out[:, i] + w_out[:, j]
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown merge strategy {strategy!r}")

    new_w_in = np.delete(w_in, j, axis=0)
    new_w_in[i] = row
    new_b_in = np.delete(b_in, j)
    new_b_in[i] = bias
    new_w_out = np.delete(w_out, j, axis=1)
    new_w_out[:, i] = col

    sizes = list(net.layer_sizes)
    sizes[layer] -= 1
    weights = [w.copy() for w in net.weights]
    biases = [b.copy() for b in net.biases]
    weights[layer - 1] = new_w_in
    biases[layer - 1] = new_b_in
    weights[layer] = new_w_out
    return Network(sizes, weights, biases)


def pooling_pass(
    net: Network, dataset: Dataset, tau: float, strategy: MergeStrategy, epoch: int = 0
) -> tuple[Network, list[PoolEvent]]:
    """Merge every non-overlapping neuron pair with similarity above tau.

    Similarities come from one activation snapshot of the incoming
    network. Per layer, candidate pairs are taken greedily by
    descending similarity, so each neuron joins at most one merge per
    pass and a layer never empties.
    """
    if not 0.0 < tau <= 1.0:
        raise ValueError("tau must lie in (0, 1]")
    acts = collect_activations(net, dataset)
    events: list[PoolEvent] = []
    current = net
    for hidden_index, matrix in enumerate(acts):
        layer = hidden_index + 1
        size = matrix.shape[1]
        scored = []
        for i in range(size):
            for j in range(i + 1, size):
                s = cosine_similarity(matrix[:, i], matrix[:, j])
                if s > tau:
                    scored.append((s, i, j))
        scored.sort(key=lambda t: (-t[0], t[1], t[2]))
        chosen: list[tuple[float, int, int]] = []
        busy: set[int] = set()
        for s, i, j in scored:
            if i in busy or j in busy:
                continue
            busy.update((i, j))
            chosen.append((s, i, j))
        # Applying merges from the highest j down keeps the remaining
        # snapshot indices valid after each deletion.
        for s, i, j in sorted(chosen, key=lambda t: -t[2]):
            current = merge_neurons(current, layer, i, j, strategy)
        for k, (s, i, j) in enumerate(chosen):
            events.append(PoolEvent(epoch, layer, i, j, s, size - k - 1))
    return current, events


def train(config: TrainConfig, dataset: Dataset) -> TrainResult:
    """Run the full loop: epochs of gradient descent, merges on schedule."""
    net = init_network(list(config.layer_sizes), config.seed)
    losses: list[float] = []
    events: list[PoolEvent] = []
    for epoch in range(1, config.epochs + 1):
        net, pre_loss = train_epoch(net, dataset, config.learning_rate)
        losses.append(pre_loss)
        if config.pooling_enabled and epoch % config.pool_interval == 0:
            net, new_events = pooling_pass(
                net, dataset, config.tau, config.merge_strategy, epoch=epoch
            )
            events.extend(new_events)
    return TrainResult(net, losses, events)


def net_to_fuzzy_graph(net: Network) -> tuple[FuzzyGraph, list[int]]:
    """View the network as a fuzzy graph.

    One vertex per neuron (membership 1.0), one edge per nonzero weight
    with membership |w| normalized by the largest magnitude in that
    layer's matrix. Returns the graph plus the indices of degenerate
    (all-zero) weight matrices, which contribute no edges.
    """
    vertices = {
        f"l{l}n{k}": 1.0
        for l, size in enumerate(net.layer_sizes)
        for k in range(size)
    }
    edges: dict[tuple[str, str], float] = {}
    degenerate: list[int] = []
    for l, w in enumerate(net.weights):
        peak = float(np.max(np.abs(w)))
        if peak == 0.0:
            degenerate.append(l)
            continue
        for out_idx in range(w.shape[0]):
            for in_idx in range(w.shape[1]):
                value = w[out_idx, in_idx]
                if value != 0.0:
                    a = f"l{l}n{in_idx}"
                    b = f"l{l + 1}n{out_idx}"
                    key = (a, b) if a <= b else (b, a)
                    edges[key] = abs(float(value)) / peak
    return FuzzyGraph(vertices, edges), degenerate


def save_weights(net: Network, path) -> None:
    """Sidecar text format: per layer a matrix block, then its bias."""
    lines = []
    for l, (w, b) in enumerate(zip(net.weights, net.biases)):
        lines.append(f"layer {l} {w.shape[0]} {w.shape[1]}")
        for row in w:
            lines.append(" ".join(repr(float(x)) for x in row))
        lines.append(f"bias {l}")
        lines.append(" ".join(repr(float(x)) for x in b))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_weights(path) -> Network:
    with open(path, encoding="utf-8") as fh:
        tokens = fh.read().split("\n")
    weights: list[np.ndarray] = []
    biases: list[np.ndarray] = []
    idx = 0
    while idx < len(tokens):
        line = tokens[idx].strip()
        idx += 1
        if not line:
            continue
        kind, *rest = line.split()
        if kind == "layer":
            _, rows, cols = (int(x) for x in rest)
            block = [
                [float(x) for x in tokens[idx + r].split()] for r in range(rows)
            ]
            idx += rows
            w = np.array(block, dtype=float)
            if w.shape != (rows, cols):
                raise ValueError(f"layer block shape {w.shape} != ({rows}, {cols})")
            weights.append(w)
        elif kind == "bias":
            biases.append(np.array([float(x) for x in tokens[idx].split()]))
            idx += 1
        else:
            raise ValueError(f"unexpected line in weights file: {line!r}")
    if len(weights) != len(biases):
        raise ValueError("weights file has mismatched layer/bias blocks")
    sizes = [weights[0].shape[1]] + [w.shape[0] for w in weights]
    return Network(sizes, weights, biases)
