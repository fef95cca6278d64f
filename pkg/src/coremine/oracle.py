"""Slow, definitional reference implementations used to check the fast paths.

Nothing here shares code with :mod:`coremine.peel` or :mod:`coremine.distsim`.
"""
from dataclasses import dataclass

import numpy as np

from ._validation import check_graph, check_k, check_partite_graph, check_thresholds


def _fixpoint(g, threshold_of):
    # Delete every below-threshold vertex at once, recount from scratch, repeat.
    alive = set(range(g.vertex_count))
    nbrs = [set(int(u) for u in g.neighbors(v)) for v in range(g.vertex_count)]
    while True:
        doomed = {v for v in alive if len(nbrs[v] & alive) < threshold_of(v)}
        if not doomed:
            break
        alive -= doomed
    mask = np.zeros(g.vertex_count, dtype=bool)
    mask[list(alive)] = True
    return mask


def fixpoint_peel(g, k):
    """Vertex mask of G(k) computed by literal repeated deletion."""
    g = check_graph(g)
    k = check_k(k)
    return _fixpoint(g, lambda v: k)


def fixpoint_peel_partite(pg, thresholds):
    pg = check_partite_graph(pg)
    ks = check_thresholds(thresholds, pg.partition_count)
    part = pg.partition_of
    return _fixpoint(pg.graph, lambda v: ks[part[v] - 1])


@dataclass(frozen=True)
class CoreDecomposition:
    coreness: np.ndarray

    @property
    def max_core(self):
        return int(self.coreness.max()) if len(self.coreness) else 0

    def mask(self, k):
        """Vertices with coreness at least ``k``."""
        return self.coreness >= k


def bucket_decomposition(g):
    """Coreness of every vertex by repeated minimum-degree removal.

    Each step scans all remaining vertices for the smallest current degree
    (ties broken by smallest index). A vertex's coreness is the largest such
    minimum seen up to and including its own removal.
    """
    g = check_graph(g)
    n = g.vertex_count
    deg = [g.degree(v) for v in range(n)]
    remaining = [True] * n
    coreness = np.zeros(n, dtype=np.int64)
    level = 0
    for _ in range(n):
        best = None
        for v in range(n):
            if remaining[v] and (best is None or deg[v] < deg[best]):
                best = v
        level = max(level, deg[best])
        coreness[best] = level
        remaining[best] = False
        for u in g.neighbors(best):
            if remaining[u]:
                deg[u] -= 1
    coreness.setflags(write=False)
    return CoreDecomposition(coreness)
