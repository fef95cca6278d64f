"""Exceptions raised while building graphs or validating peel inputs."""


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"self-loop on vertex {label!r}")


class DuplicateEdgeError(GraphError):
    def __init__(self, u, v):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u!r}, {v!r})")


class IntraPartitionEdgeError(GraphError):
    def __init__(self, u, v, partition):
        self.u, self.v, self.partition = u, v, partition
        super().__init__(
            f"edge ({u!r}, {v!r}) joins two vertices of partition {partition}"
        )


class UnknownPartitionError(GraphError):
    def __init__(self, label, index=None):
        self.label, self.index = label, index
        if index is None:
            msg = f"vertex {label!r} has no partition assignment"
        else:
            msg = f"vertex {label!r} has partition index {index!r} out of range"
        super().__init__(msg)


class ThresholdArityMismatch(ValueError):
    def __init__(self, expected, got):
        self.expected, self.got = expected, got
        super().__init__(f"expected {expected} thresholds, got {got}")
