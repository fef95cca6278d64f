"""Input checks shared by the functional API and the estimators."""
import numbers

from .exceptions import ThresholdArityMismatch
from .graph import Graph, PartiteGraph


def check_graph(g):
    if isinstance(g, PartiteGraph):
        return g.graph
    if not isinstance(g, Graph):
        raise TypeError(f"expected Graph, got {type(g).__name__}")
    return g


def check_partite_graph(pg):
    if not isinstance(pg, PartiteGraph):
        raise TypeError(f"expected PartiteGraph, got {type(pg).__name__}")
    return pg


def check_k(k, name="k"):
    if isinstance(k, bool) or not isinstance(k, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {k!r}")
    if k < 0:
        raise ValueError(f"{name} must be non-negative, got {k}")
    return int(k)


def check_thresholds(thresholds, p):
    """Validate a per-partition threshold vector and return it as a tuple."""
    if isinstance(thresholds, numbers.Integral):
        thresholds = (thresholds,)
    values = tuple(check_k(t, "threshold") for t in thresholds)
    if len(values) != p:
        raise ThresholdArityMismatch(p, len(values))
    return values


def check_vertex_thresholds(thresholds, n):
    """Expand a uniform ``k`` or validate a per-vertex threshold sequence."""
    if isinstance(thresholds, numbers.Integral) and not isinstance(thresholds, bool):
        return [check_k(thresholds)] * n
    values = [check_k(t, "threshold") for t in thresholds]
    if len(values) != n:
        raise ThresholdArityMismatch(n, len(values))
    return values

