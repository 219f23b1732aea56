"""Fuzzy graphs, vertex pooling, and similarity-driven neuron merging."""

from .analysis import (
    DegreeReport,
    EdgeClass,
    classify_edge,
    connectivity_matrix,
    connectivity_strength,
    degree_report,
    is_complete_fuzzy,
    is_connected,
    is_f_block,
    is_f_tree,
    is_fuzzy_bridge,
    is_fuzzy_cutvertex,
    path_strength,
)
from .criteria import Criteria, audit_hereditary, check_criteria, conn_at_least
from .datasets import Dataset, dataset1, dataset2
from .experiments import (
    ConfusionMatrix,
    DecisionGrid,
    ExperimentConfig,
    RunReport,
    confusion,
    decision_grid,
    run_experiment,
)
from .graph import EPS, FuzzyGraph, load_graph, parse_graph, save_graph, serialize_graph
from .isomorphism import graphs_isomorphic
from .network import Network, forward, init_network, loss, train_epoch
from .pooling import (
    PoolResult,
    pool_block,
    pool_complete,
    pool_cycle,
    pool_pair,
    pool_sequence,
)
from .reports import emit_report, parse_report
from .training import (
    MergeStrategy,
    PoolEvent,
    TrainConfig,
    collect_activations,
    cosine_similarity,
    merge_neurons,
    net_to_fuzzy_graph,
    pooling_pass,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "ConfusionMatrix",
    "Criteria",
    "Dataset",
    "DecisionGrid",
    "DegreeReport",
    "EdgeClass",
    "ExperimentConfig",
    "FuzzyGraph",
    "MergeStrategy",
    "Network",
    "PoolEvent",
    "PoolResult",
    "RunReport",
    "TrainConfig",
    "audit_hereditary",
    "check_criteria",
    "classify_edge",
    "collect_activations",
    "confusion",
    "conn_at_least",
    "connectivity_matrix",
    "connectivity_strength",
    "cosine_similarity",
    "dataset1",
    "dataset2",
    "decision_grid",
    "degree_report",
    "emit_report",
    "forward",
    "graphs_isomorphic",
    "init_network",
    "is_complete_fuzzy",
    "is_connected",
    "is_f_block",
    "is_f_tree",
    "is_fuzzy_bridge",
    "is_fuzzy_cutvertex",
    "load_graph",
    "loss",
    "merge_neurons",
    "net_to_fuzzy_graph",
    "parse_graph",
    "parse_report",
    "path_strength",
    "pool_block",
    "pool_complete",
    "pool_cycle",
    "pool_pair",
    "pool_sequence",
    "pooling_pass",
    "run_experiment",
    "save_graph",
    "serialize_graph",
    "train",
    "train_epoch",
]
