"""Synchronized-phase simulation of the vertex-centric off-message protocol.

Every vertex is a node that knows only its neighbors, its current degree and
its own threshold. In phase 1 each node runs :meth:`NodeState.on_initial`;
in every later phase each still-active node consumes the off-messages sent to
it during the previous phase through :meth:`NodeState.on_message`. The run
stops at the first phase in which nothing is sent; that quiescent phase is
not counted.
"""
import enum
import random
from dataclasses import dataclass

import numpy as np

from ._validation import (
    check_graph,
    check_partite_graph,
    check_thresholds,
    check_vertex_thresholds,
)
from .graph import PartiteGraph


class Status(enum.Enum):
    ACTIVE = "active"
    OFF = "off"


class NodeState:
    """Local state of one node."""

    __slots__ = ("neighbors", "degree", "threshold", "status", "batches_sent")

    def __init__(self, neighbors, threshold):
        self.neighbors = tuple(neighbors)
        self.degree = len(self.neighbors)
        self.threshold = threshold
        self.status = Status.ACTIVE
        self.batches_sent = 0

    def _go_off(self):
        self.status = Status.OFF
        self.batches_sent += 1
        return self.neighbors

    def on_initial(self):
        """Return the recipients of this node's off-messages (possibly none)."""
        if self.degree < self.threshold:
            return self._go_off()
        return ()

    def on_message(self):
        # A node that already went off earlier in the same mailbox still
        # consumes the message but never broadcasts twice.
        self.degree -= 1
        if self.status is Status.ACTIVE and self.degree < self.threshold:
            return self._go_off()
        return ()


@dataclass(frozen=True)
class SimReport:
    """Message and phase accounting of one simulated run.

    ``off_phase[v]`` is the phase in which ``v`` went off, or 0 if it stayed
    active. ``sent_per_node[v]`` counts the off-messages ``v`` sent.
    """

    phases: int
    messages_per_phase: tuple
    total_messages: int
    final_active: np.ndarray
    off_phase: np.ndarray
    sent_per_node: np.ndarray

    @property
    def active_count(self):
        return int(self.final_active.sum())

    def summary(self):
        return {
            "phases": self.phases,
            "total_messages": self.total_messages,
            "messages_per_phase": list(self.messages_per_phase),
            "active_count": self.active_count,
        }

    def __eq__(self, other):
        if not isinstance(other, SimReport):
            return NotImplemented
        return (self.phases == other.phases
                and self.messages_per_phase == other.messages_per_phase
                and self.total_messages == other.total_messages
                and np.array_equal(self.final_active, other.final_active)
                and np.array_equal(self.off_phase, other.off_phase)
                and np.array_equal(self.sent_per_node, other.sent_per_node))

    __hash__ = None


def vertex_thresholds(pg, thresholds):
    """Expand a per-partition threshold vector into one threshold per vertex."""
    pg = check_partite_graph(pg)
    ks = check_thresholds(thresholds, pg.partition_count)
    return [ks[i - 1] for i in pg.partition_of.tolist()]


def _simulate(g, thresholds, order_mailbox):
    if isinstance(g, PartiteGraph):
        thr = vertex_thresholds(g, thresholds)
        g = g.graph
    else:
        g = check_graph(g)
        thr = check_vertex_thresholds(thresholds, g.vertex_count)
    indptr, indices = g.indptr.tolist(), g.indices.tolist()
    nodes = [NodeState(indices[indptr[v]:indptr[v + 1]], thr[v])
             for v in range(g.vertex_count)]
    off_phase = [0] * g.vertex_count
    sent = [0] * g.vertex_count

    phase = 1
    outbox = []
    for v, node in enumerate(nodes):
        recipients = node.on_initial()
        if node.status is Status.OFF:
            off_phase[v] = phase
        outbox.extend((v, u) for u in recipients)
        sent[v] += len(recipients)

    per_phase = []
    while outbox:
        per_phase.append(len(outbox))
        phase += 1
        # only nodes active when the phase opens take delivery
        deliveries = [(s, r) for s, r in outbox if nodes[r].status is Status.ACTIVE]
        outbox = []
        for s, r in order_mailbox(deliveries):
            node = nodes[r]
            recipients = node.on_message()
            if recipients:
                off_phase[r] = phase
                outbox.extend((r, u) for u in recipients)
                sent[r] += len(recipients)

    final_active = np.array([n.status is Status.ACTIVE for n in nodes], dtype=bool)
    final_active.setflags(write=False)
    return SimReport(
        phases=len(per_phase),
        messages_per_phase=tuple(per_phase),
        total_messages=sum(per_phase),
        final_active=final_active,
        off_phase=np.array(off_phase, dtype=np.int64),
        sent_per_node=np.array(sent, dtype=np.int64),
    )


def run_sync(g, thresholds):
    """Simulate the protocol with deterministic delivery.

    For a plain :class:`Graph`, ``thresholds`` is either a single ``k`` or one
    threshold per vertex. For a :class:`PartiteGraph` it is the per-partition
    vector ``(k1, ..., kp)``. Each mailbox is processed in ascending sender
    order.
    """
    return _simulate(g, thresholds, lambda d: sorted(d, key=lambda m: (m[1], m[0])))


def run_sync_shuffled(g, thresholds, delivery_seed):
    """Like :func:`run_sync`, but deliveries within a phase arrive in a random order."""
    rng = random.Random(delivery_seed)

    def shuffled(deliveries):
        deliveries = list(deliveries)
        rng.shuffle(deliveries)
        return deliveries

    return _simulate(g, thresholds, shuffled)


# Convergence bounds. Each returns None when its precondition does not hold.

def plain_phase_bound(n_vertices, k):
    """``|V| - k`` for k-core mining, defined when ``k <= |V|``."""
    return n_vertices - k if k <= n_vertices else None


def bipartite_phase_bound(sizes, thresholds):
    """``(|V1| - k2) + (|V2| - k1) + 1``; note the crossed indices.

    Applied only when ``k_i <= |V_i|`` for both sides.
    """
    (n1, n2), (k1, k2) = sizes, thresholds
    if k1 > n1 or k2 > n2:
        return None
    return (n1 - k2) + (n2 - k1) + 1


def partite_phase_bound(sizes, thresholds):
    """``sum |V_i| - min k_i``, defined when ``k_i <= |V_i|`` for every i."""
    if any(k > n for n, k in zip(sizes, thresholds)):
        return None
    return sum(sizes) - min(thresholds)


def phase_bound(g, thresholds):
    """Pick the bound matching the input kind: plain, bipartite or p-partite."""
    if isinstance(g, PartiteGraph):
        ks = check_thresholds(thresholds, g.partition_count)
        sizes = g.partition_sizes
        if g.partition_count == 1:
            return plain_phase_bound(sizes[0], ks[0])
        if g.partition_count == 2:
            return bipartite_phase_bound(sizes, ks)
        return partite_phase_bound(sizes, ks)
    return plain_phase_bound(check_graph(g).vertex_count, thresholds)

