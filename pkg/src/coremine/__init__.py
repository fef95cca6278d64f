"""Linear-time k-core and (k1, ..., kp)-core mining."""
from .distsim import SimReport, run_sync, run_sync_shuffled
from .estimators import KCoreMiner, PartiteCoreMiner
from .exceptions import (
    DuplicateEdgeError,
    GraphError,
    IntraPartitionEdgeError,
    SelfLoopError,
    ThresholdArityMismatch,
    UnknownPartitionError,
)
from .graph import Graph, PartiteGraph, build_graph, build_partite_graph, induced_subgraph
from .peel import CoreList, PeelResult, extract_cores, peel_k, peel_partite

__version__ = "0.1.0"

__all__ = [
    "CoreList",
    "DuplicateEdgeError",
    "Graph",
    "GraphError",
    "IntraPartitionEdgeError",
    "KCoreMiner",
    "PartiteCoreMiner",
    "PartiteGraph",
    "PeelResult",
    "SelfLoopError",
    "SimReport",
    "ThresholdArityMismatch",
    "UnknownPartitionError",
    "build_graph",
    "build_partite_graph",
    "extract_cores",
    "induced_subgraph",
    "peel_k",
    "peel_partite",
    "run_sync",
    "run_sync_shuffled",
]
