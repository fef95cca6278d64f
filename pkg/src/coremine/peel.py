"""Sorting-free linear peeling for k-cores and (k1, ..., kp)-cores.

A single pass over the vertices starts a FIFO cascade from every vertex whose
counter is below its threshold. Each vertex is enqueued at most once, and
each adjacency entry is touched at most once (when its owner is dequeued), so
the whole run is O(|V| + |E|).
"""
from collections import deque
from dataclasses import dataclass

import numpy as np

from ._validation import check_graph, check_k, check_partite_graph, check_thresholds


@dataclass(frozen=True)
class PeelResult:
    """Outcome of one peel.

    Attributes
    ----------
    active : ndarray of bool
        ``active[v]`` is true iff ``v`` survives into G(k) (or G(k1..kp)).
    final_counters : ndarray of int
        Counter values at termination. For active vertices this is the degree
        inside the surviving subgraph; for removed vertices it is not
        meaningful (decrements continue after removal).
    removal_order : tuple of int
        Removed vertices in dequeue order.
    operations : int
        Elementary operations performed: status checks, counter decrements,
        enqueues and dequeues.
    """

    active: np.ndarray
    final_counters: np.ndarray
    removal_order: tuple
    operations: int

    @property
    def active_count(self):
        return int(self.active.sum())


@dataclass(frozen=True)
class CoreList:
    """Connected components of a peeled graph, as tuples of external labels."""

    cores: tuple
    indices: tuple

    def __len__(self):
        return len(self.cores)

    def __iter__(self):
        return iter(self.cores)

    def __getitem__(self, i):
        return self.cores[i]


class _Peeler:
    # Working state for one run; the graph itself is never touched.

    def __init__(self, g, threshold):
        self.threshold = threshold
        self.indptr = g.indptr.tolist()
        self.indices = g.indices.tolist()
        n = g.vertex_count
        self.active = [True] * n
        self.counter = [self.indptr[v + 1] - self.indptr[v] for v in range(n)]
        self.removed = []
        self.ops = 0

    def try_start(self, v):
        self.ops += 1
        if self.active[v] and self.counter[v] < self.threshold[v]:
            self.active[v] = False
            self.iterative_peel(deque([v]))

    def iterative_peel(self, queue):
        # `threshold` is a per-vertex list here so the same loop serves both
        # the uniform and the partite case.
        indptr, indices = self.indptr, self.indices
        active, counter, thr = self.active, self.counter, self.threshold
        removed = self.removed
        ops = 1  # initial enqueue
        while queue:
            w = queue.popleft()
            removed.append(w)
            lo, hi = indptr[w], indptr[w + 1]
            ops += 1 + 2 * (hi - lo)
            for u in indices[lo:hi]:
                counter[u] -= 1
                if active[u] and counter[u] < thr[u]:
                    active[u] = False
                    queue.append(u)
                    ops += 1
        self.ops += ops

    def result(self):
        active = np.array(self.active, dtype=bool)
        counters = np.array(self.counter, dtype=np.int64)
        active.setflags(write=False)
        counters.setflags(write=False)
        return PeelResult(active, counters, tuple(self.removed), self.ops)


def peel_k(g, k):
    """Compute G(k), the largest subgraph of ``g`` with minimum degree ``k``.

    ``k = 0`` keeps every vertex; ``k`` above the maximum degree yields an
    empty active set.
    """
    g = check_graph(g)
    k = check_k(k)
    p = _Peeler(g, [k] * g.vertex_count)
    for v in range(g.vertex_count):
        p.try_start(v)
    return p.result()


def peel_partite(pg, thresholds):
    """Compute G(k1, ..., kp) for a p-partite graph.

    Vertices are scanned partition by partition (1..p), and a vertex of
    partition ``i`` is removed once its counter drops below ``thresholds[i-1]``.
    """
    pg = check_partite_graph(pg)
    ks = check_thresholds(thresholds, pg.partition_count)
    g = pg.graph
    part = pg.partition_of.tolist()
    p = _Peeler(g, [ks[i - 1] for i in part])
    for i in range(1, pg.partition_count + 1):
        for v in pg.members(i).tolist():
            p.try_start(v)
    return p.result()


def extract_cores(g, result):
    """Split the surviving vertices of ``result`` into connected components.

    Components are ordered by their smallest dense index; each one is reported
    as a tuple of labels in dense-index order.
    """
    g = check_graph(g)
    active = result.active
    if len(active) != g.vertex_count:
        raise ValueError("peel result does not belong to this graph")
    indptr, indices = g.indptr.tolist(), g.indices.tolist()
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if not active[s] or seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            w = stack.pop()
            for u in indices[indptr[w]:indptr[w + 1]]:
                if active[u] and not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return CoreList(
        cores=tuple(tuple(g.label(v) for v in c) for c in comps),
        indices=tuple(comps),
    )
