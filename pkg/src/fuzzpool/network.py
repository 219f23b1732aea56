"""Dense feedforward network with sigmoid activations and backprop.

Weights are stored per layer as (next_size x prev_size) matrices.
Networks are treated as values: every operation returns a fresh
instance, which keeps training runs trivially reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .datasets import Dataset
from .errors import BadArchitecture, EmptyDataset, ShapeMismatch


def sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-z))


@dataclass
class Network:
    layer_sizes: list[int]
    weights: list[np.ndarray]
    biases: list[np.ndarray]

    def copy(self) -> "Network":
        return Network(
            list(self.layer_sizes),
            [w.copy() for w in self.weights],
            [b.copy() for b in self.biases],
        )

    @property
    def hidden_sizes(self) -> list[int]:
        return self.layer_sizes[1:-1]


def init_network(layer_sizes: list[int], seed: int) -> Network:
    """Uniform init with bound sqrt(6 / (fan_in + fan_out)); zero biases."""
    if len(layer_sizes) < 2 or any(s < 1 for s in layer_sizes):
        raise BadArchitecture(f"need >= 2 layers of positive size, got {layer_sizes}")
    rng = np.random.default_rng(seed)
    weights = []
    biases = []
    for fan_in, fan_out in zip(layer_sizes, layer_sizes[1:]):
        bound = math.sqrt(6.0 / (fan_in + fan_out))
        weights.append(rng.uniform(-bound, bound, size=(fan_out, fan_in)))
        biases.append(np.zeros(fan_out))
    return Network(list(layer_sizes), weights, biases)


def forward(net: Network, x: np.ndarray) -> list[np.ndarray]:
    """Activations of every layer (input included) for one sample."""
    x = np.asarray(x, dtype=float)
    if x.shape != (net.layer_sizes[0],):
        raise ShapeMismatch(f"input shape {x.shape}, expected ({net.layer_sizes[0]},)")
    acts = [x]
    for w, b in zip(net.weights, net.biases):
        acts.append(sigmoid(w @ acts[-1] + b))
    return acts


def forward_batch(net: Network, inputs: np.ndarray) -> list[np.ndarray]:
    """Activations per layer for a (n_samples x input_size) batch."""
    a = np.asarray(inputs, dtype=float)
    if a.ndim != 2 or a.shape[1] != net.layer_sizes[0]:
        raise ShapeMismatch(f"batch shape {a.shape}, expected (n, {net.layer_sizes[0]})")
    acts = [a]
    for w, b in zip(net.weights, net.biases):
        a = sigmoid(a @ w.T + b)
        acts.append(a)
    return acts


def loss(net: Network, dataset: Dataset) -> float:
    """Squared error averaged over samples and output units."""
    if len(dataset) == 0:
        raise EmptyDataset("loss of an empty dataset")
    out = forward_batch(net, dataset.inputs)[-1]
    return float(np.mean((dataset.targets() - out) ** 2))


def loss_gradients(
    net: Network, dataset: Dataset
) -> tuple[float, list[np.ndarray], list[np.ndarray]]:
    """Loss plus its exact gradients w.r.t. every weight matrix and bias."""
    if len(dataset) == 0:
        raise EmptyDataset("gradients of an empty dataset")
    targets = dataset.targets()
    acts = forward_batch(net, dataset.inputs)
    out = acts[-1]
    value = float(np.mean((targets - out) ** 2))

    # d(mean squared error)/d(output), then chain through sigmoid layers.
    delta = 2.0 * (out - targets) / targets.size * out * (1.0 - out)
    grads_w: list[np.ndarray] = [None] * len(net.weights)  # type: ignore[list-item]
    grads_b: list[np.ndarray] = [None] * len(net.biases)  # type: ignore[list-item]
    for layer in range(len(net.weights) - 1, -1, -1):
        grads_w[layer] = delta.T @ acts[layer]
        grads_b[layer] = delta.sum(axis=0)
        if layer > 0:
            a_prev = acts[layer]
            delta = (delta @ net.weights[layer]) * a_prev * (1.0 - a_prev)
    return value, grads_w, grads_b


def train_epoch(net: Network, dataset: Dataset, learning_rate: float) -> tuple[Network, float]:
    """One full-batch gradient step; returns (new net, pre-step loss)."""
    value, grads_w, grads_b = loss_gradients(net, dataset)
    weights = [w - learning_rate * gw for w, gw in zip(net.weights, grads_w)]
    biases = [b - learning_rate * gb for b, gb in zip(net.biases, grads_b)]
    return Network(list(net.layer_sizes), weights, biases), value
