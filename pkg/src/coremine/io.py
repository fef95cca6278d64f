"""Readers for the plain-text edge-list and partition formats.

Edge list::

    # comment
    %vertices lonely1 lonely2
    a b
    b c

Partition file (1-based indices)::

    a 1
    b 2
"""
from .exceptions import UnknownPartitionError
from .graph import build_graph, build_partite_graph


class ParseError(ValueError):
    def __init__(self, path, lineno, message):
        self.path, self.lineno = path, lineno
        super().__init__(f"{path}:{lineno}: {message}")


def _lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if line and not line.startswith("#"):
                yield lineno, line


def parse_edge_list(path):
    """Return ``(edges, declared_vertices)`` as label lists."""
    edges, declared = [], []
    for lineno, line in _lines(path):
        if line.startswith("%"):
            head, *rest = line.split()
            if head != "%vertices":
                raise ParseError(path, lineno, f"unknown header {head!r}")
            declared.extend(rest)
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(path, lineno, f"expected 2 labels, got {len(fields)}")
        edges.append((fields[0], fields[1]))
    return edges, declared


def read_partitions(path):
    """Return ``(partition_of, p)``; ``p`` is the largest index present."""
    partition_of = {}
    for lineno, line in _lines(path):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(path, lineno, "expected '<label> <partition-index>'")
        label, raw = fields
        try:
            idx = int(raw)
        except ValueError:
            raise ParseError(path, lineno, f"bad partition index {raw!r}") from None
        if idx < 1:
            raise ParseError(path, lineno, f"partition index must be >= 1, got {idx}")
        if label in partition_of:
            raise ParseError(path, lineno, f"vertex {label!r} assigned twice")
        partition_of[label] = idx
    return partition_of, max(partition_of.values(), default=1)


def read_edge_list(path):
    edges, declared = parse_edge_list(path)
    return build_graph(edges, vertices=declared)


def read_partite_graph(graph_path, partition_path):
    edges, declared = parse_edge_list(graph_path)
    partition_of, p = read_partitions(partition_path)
    # declared-but-unassigned vertices must still fail as unknown
    for lab in declared:
        if lab not in partition_of:
            raise UnknownPartitionError(lab)
    return build_partite_graph(edges, partition_of, p)
