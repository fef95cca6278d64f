"""Immutable simple undirected graphs in CSR form, plus p-partite labeling.

Vertices carry arbitrary hashable external labels that are mapped to dense
indices ``0..n-1`` at build time; every algorithm works on the dense indices.
"""
from collections.abc import Mapping

import numpy as np

from .exceptions import (
    DuplicateEdgeError,
    IntraPartitionEdgeError,
    SelfLoopError,
    UnknownPartitionError,
)


def _frozen(arr, dtype=np.int64):
    arr = np.ascontiguousarray(arr, dtype=dtype)
    arr.setflags(write=False)
    return arr


class Graph:
    """Simple undirected graph stored as compressed adjacency (CSR).

    ``indices[indptr[v]:indptr[v + 1]]`` holds the neighbors of dense vertex
    ``v`` in ascending order. Instances are read-only after construction.
    """

    __slots__ = ("_indptr", "_indices", "_labels", "_index_of")

    def __init__(self, indptr, indices, labels):
        self._indptr = _frozen(indptr)
        self._indices = _frozen(indices)
        self._labels = tuple(labels)
        self._index_of = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._indptr) != len(self._labels) + 1:
            raise ValueError("indptr length must be vertex_count + 1")

    def __setattr__(self, name, value):
        if hasattr(self, "_index_of"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def vertex_count(self):
        return len(self._labels)

    @property
    def edge_count(self):
        return len(self._indices) // 2

    @property
    def indptr(self):
        return self._indptr

    @property
    def indices(self):
        return self._indices

    @property
    def degrees(self):
        return np.diff(self._indptr)

    @property
    def labels(self):
        """External label of each dense index."""
        return self._labels

    def index(self, label):
        return self._index_of[label]

    def label(self, v):
        return self._labels[v]

    def neighbors(self, v):
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v):
        return int(self._indptr[v + 1] - self._indptr[v])

    def edges(self):
        """Yield each edge once as a dense pair ``(u, v)`` with ``u < v``."""
        for u in range(self.vertex_count):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def labeled_edges(self):
        for u, v in self.edges():
            yield self._labels[u], self._labels[v]

    def __len__(self):
        return self.vertex_count

    def __repr__(self):
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


class PartiteGraph:
    """A :class:`Graph` whose vertices are split into ``p`` independent sets.

    ``partition_of[v]`` is the 1-based partition index of dense vertex ``v``.
    Empty partitions are allowed.
    """

    __slots__ = ("graph", "partition_of", "partition_count")

    def __init__(self, graph, partition_of, partition_count):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "partition_of", _frozen(partition_of))
        object.__setattr__(self, "partition_count", int(partition_count))

    def __setattr__(self, name, value):
        raise AttributeError("PartiteGraph is immutable")

    @property
    def partition_sizes(self):
        return [int(c) for c in
                np.bincount(self.partition_of, minlength=self.partition_count + 1)[1:]]

    def members(self, i):
        """Dense indices of partition ``i`` (1-based), ascending."""
        return np.flatnonzero(self.partition_of == i)

    def __repr__(self):
        return (f"PartiteGraph(p={self.partition_count}, "
                f"sizes={self.partition_sizes}, edges={self.graph.edge_count})")


def _assemble(n, src, dst, labels):
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    # both directions, sorted by (row, col)
    rows = np.concatenate([src, dst])
    cols = np.concatenate([dst, src])
    order = np.lexsort((cols, rows))
    indices = cols[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return Graph(indptr, indices, labels)


def build_graph(edges, vertices=()):
    """Build a :class:`Graph` from an iterable of label pairs.

    ``vertices`` declares labels up front (in order), which is the only way
    to introduce isolated vertices. Self-loops and repeated unordered pairs
    are rejected rather than silently collapsed.

    >>> g = build_graph([("a", "b"), ("b", "c"), ("a", "c")])
    >>> g.vertex_count, g.edge_count, g.degrees.tolist()
    (3, 3, [2, 2, 2])
    """
    index_of = {}
    labels = []

    def intern(lab):
        i = index_of.get(lab)
        if i is None:
            i = index_of[lab] = len(labels)
            labels.append(lab)
        return i

    for lab in vertices:
        intern(lab)

    src, dst = [], []
    seen = set()
    for pair in edges:
        a, b = pair
        if a == b:
            raise SelfLoopError(a)
        u, v = intern(a), intern(b)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(a, b)
        seen.add(key)
        src.append(u)
        dst.append(v)

    return _assemble(len(labels), src, dst, labels)


def build_partite_graph(edges, partition_of, p):
    """Build a :class:`PartiteGraph`.

    ``partition_of`` maps each label to a partition index in ``1..p``. Every
    label in the map becomes a vertex, so isolated vertices may be declared
    there.
    """
    p = int(p)
    if p < 1:
        raise ValueError(f"partition count must be >= 1, got {p}")
    if not isinstance(partition_of, Mapping):
        partition_of = dict(partition_of)
    for lab, idx in partition_of.items():
        if not isinstance(idx, (int, np.integer)) or not 1 <= idx <= p:
            raise UnknownPartitionError(lab, idx)

    edges = list(edges)
    for a, b in edges:
        for lab in (a, b):
            if lab not in partition_of:
                raise UnknownPartitionError(lab)

    g = build_graph(edges, vertices=partition_of.keys())
    part = np.fromiter((partition_of[lab] for lab in g.labels),
                       dtype=np.int64, count=g.vertex_count)
    for u, v in g.edges():
        if part[u] == part[v]:
            raise IntraPartitionEdgeError(g.label(u), g.label(v), int(part[u]))
    return PartiteGraph(g, part, p)


def induced_subgraph(g, keep):
    """Return the subgraph of ``g`` induced by the vertices where ``keep`` is true.

    Labels carry over; surviving vertices keep their relative order.
    """
    keep = np.asarray(keep, dtype=bool)
    if keep.shape != (g.vertex_count,):
        raise ValueError(
            f"mask length {keep.shape} does not match vertex_count {g.vertex_count}")
    new_index = np.full(g.vertex_count, -1, dtype=np.int64)
    kept = np.flatnonzero(keep)
    new_index[kept] = np.arange(len(kept))

    rows = np.repeat(np.arange(g.vertex_count), g.degrees)
    cols = g.indices
    sel = keep[rows] & keep[cols] & (rows < cols)
    labels = [g.label(v) for v in kept]
    return _assemble(len(kept), new_index[rows[sel]], new_index[cols[sel]], labels)


def induced_partite_subgraph(pg, keep):
    keep = np.asarray(keep, dtype=bool)
    sub = induced_subgraph(pg.graph, keep)
    return PartiteGraph(sub, pg.partition_of[keep], pg.partition_count)
