"""scikit-learn style wrappers around the peeling functions.

The estimators take a :class:`~coremine.graph.Graph` (or
:class:`~coremine.graph.PartiteGraph`) where sklearn would take ``X``.
``labels_`` follows the clustering convention: the core id of each vertex,
``-1`` for peeled-off vertices.
"""
import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_graph, check_k, check_partite_graph, check_thresholds
from .graph import induced_partite_subgraph, induced_subgraph
from .peel import extract_cores, peel_k, peel_partite


def _core_labels(n, cores):
    labels = np.full(n, -1, dtype=np.int64)
    for cid, members in enumerate(cores.indices):
        labels[list(members)] = cid
    return labels


class KCoreMiner(ClusterMixin, TransformerMixin, BaseEstimator):
    """Find all k-cores of a graph for one fixed ``k``.

    Parameters
    ----------
    k : int, default=2
        Minimum degree every surviving vertex must keep.

    Attributes
    ----------
    peel_result_ : PeelResult
    cores_ : CoreList
    labels_ : ndarray of shape (n_vertices,)
    n_vertices_in_ : int

    Examples
    --------
    >>> from coremine import build_graph
    >>> g = build_graph([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
    >>> KCoreMiner(k=2).fit(g).cores_.cores
    (('a', 'b', 'c'),)
    """

    def __init__(self, k=2):
        self.k = k

    def fit(self, graph, y=None):
        g = check_graph(graph)
        k = check_k(self.k)
        self.peel_result_ = peel_k(g, k)
        self.cores_ = extract_cores(g, self.peel_result_)
        self.labels_ = _core_labels(g.vertex_count, self.cores_)
        self.n_vertices_in_ = g.vertex_count
        return self

    def _check_same_size(self, n):
        if n != self.n_vertices_in_:
            raise ValueError(
                f"graph has {n} vertices, but {type(self).__name__} was fitted "
                f"on {self.n_vertices_in_}")

    def get_support(self):
        """Boolean mask of vertices that survive the peel."""
        check_is_fitted(self, "peel_result_")
        return np.array(self.peel_result_.active)

    def transform(self, graph):
        """Return the subgraph induced by the surviving vertices."""
        check_is_fitted(self, "peel_result_")
        g = check_graph(graph)
        self._check_same_size(g.vertex_count)
        return induced_subgraph(g, self.peel_result_.active)


class PartiteCoreMiner(KCoreMiner):
    """Find all (k1, ..., kp)-cores of a p-partite graph.

    Parameters
    ----------
    thresholds : sequence of int
        One minimum degree per partition, in partition order.
    """

    def __init__(self, thresholds=(1, 1)):
        self.thresholds = thresholds

    def fit(self, graph, y=None):
        pg = check_partite_graph(graph)
        ks = check_thresholds(self.thresholds, pg.partition_count)
        self.peel_result_ = peel_partite(pg, ks)
        self.cores_ = extract_cores(pg.graph, self.peel_result_)
        self.labels_ = _core_labels(pg.graph.vertex_count, self.cores_)
        self.n_vertices_in_ = pg.graph.vertex_count
        return self

    def transform(self, graph):
        check_is_fitted(self, "peel_result_")
        pg = check_partite_graph(graph)
        self._check_same_size(pg.graph.vertex_count)
        return induced_partite_subgraph(pg, self.peel_result_.active)
