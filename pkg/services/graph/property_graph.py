"""Property graphs with canonical node order.

A :class:`Graph` is undirected and unweighted. Nodes are always stored sorted by
key, so two graphs built from the same nodes and edges are identical whatever
order they were supplied in; everything downstream (pooling tie-breaks, model
output, file bytes) inherits that canonical order.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from api.exceptions import ValidationError
from services.numerics.matrix import Matrix, Vector

NodeSpec = Tuple[str, str, Sequence[float]]
EdgeSpec = Tuple[str, str]


class GraphBuildError(ValidationError):
    """Raised when nodes or edges do not form a valid graph."""

    def __init__(self, message: str, keys: Sequence[str]):
        super().__init__(message, details={"keys": list(keys)})
        self.keys = tuple(keys)


@dataclass(frozen=True, eq=False)
class Node:
    key: str
    kind: str
    feature: Vector


class Graph:
    """An immutable graph: canonical nodes, a feature matrix and 0/1 adjacency."""

    def __init__(
        self,
        keys: Tuple[str, ...],
        kinds: Tuple[str, ...],
        features: Matrix,
        adjacency: Matrix,
        label: Optional[str] = None,
        graph_id: str = "",
    ):
        self.keys = keys
        self.kinds = kinds
        self.features = features
        self.adjacency = adjacency
        self.label = label
        self.graph_id = graph_id
        self.features.setflags(write=False)
        self.adjacency.setflags(write=False)
        self._index: Dict[str, int] = {key: i for i, key in enumerate(keys)}
        self.degree = adjacency.sum(axis=1).astype(np.int64)
        self.degree.setflags(write=False)

    @property
    def num_nodes(self) -> int:
        return len(self.keys)

    @property
    def feature_dim(self) -> int:
        return int(self.features.shape[1])

    @property
    def nodes(self) -> List[Node]:
        return [
            Node(key, kind, self.features[i])
            for i, (key, kind) in enumerate(zip(self.keys, self.kinds))
        ]

    def index_of(self, key: str) -> int:
        try:
            return self._index[key]
        except KeyError:
            raise GraphBuildError(f"Unknown node key: {key!r}", [key]) from None

    def neighbors(self, index: int) -> List[int]:
        """Neighbor indices of ``index`` in canonical order."""
        return [int(j) for j in np.flatnonzero(self.adjacency[index])]

    def edges(self) -> List[Tuple[int, int]]:
        """Each undirected edge once, as ``(i, j)`` with ``i < j``."""
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def with_features(self, features: Matrix) -> "Graph":
        """Same nodes and topology with a new feature matrix (one row per node)."""
        features = np.array(features, dtype=np.float64)
        if features.ndim != 2 or features.shape[0] != self.num_nodes:
            raise ValidationError(
                f"Feature matrix shape {features.shape} does not fit "
                f"{self.num_nodes} nodes"
            )
        return Graph(
            self.keys,
            self.kinds,
            features,
            np.array(self.adjacency),
            label=self.label,
            graph_id=self.graph_id,
        )

    def with_label(self, label: Optional[str], graph_id: Optional[str] = None) -> "Graph":
        return Graph(
            self.keys,
            self.kinds,
            np.array(self.features),
            np.array(self.adjacency),
            label=label,
            graph_id=self.graph_id if graph_id is None else graph_id,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.keys == other.keys
            and self.kinds == other.kinds
            and self.label == other.label
            and self.graph_id == other.graph_id
            and np.array_equal(self.features, other.features)
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def __repr__(self) -> str:
        return (
            f"Graph(id={self.graph_id!r}, nodes={self.num_nodes}, "
            f"edges={len(self.edges())}, label={self.label!r})"
        )


def build_graph(
    nodes: Iterable[NodeSpec],
    edges: Iterable[EdgeSpec],
    label: Optional[str] = None,
    graph_id: str = "",
) -> Graph:
    """Build a canonical graph from ``(key, kind, feature)`` nodes and key pairs.

    Duplicate edges collapse to one. Raises :class:`GraphBuildError` for duplicate
    keys, unknown edge endpoints, self-edges, ragged features or an empty node set.
    """
    specs = list(nodes)
    if not specs:
        raise GraphBuildError("A graph needs at least one node", [])

    seen: Dict[str, int] = {}
    for key, _, _ in specs:
        if key in seen:
            raise GraphBuildError(f"Duplicate node key: {key!r}", [key])
        seen[key] = 1

    specs.sort(key=lambda spec: spec[0])
    keys = tuple(spec[0] for spec in specs)
    kinds = tuple(spec[1] for spec in specs)

    rows = [np.asarray(spec[2], dtype=np.float64).reshape(-1) for spec in specs]
    dim = rows[0].size
    for key, row in zip(keys, rows):
        if row.size != dim:
            raise GraphBuildError(
                f"Node {key!r} has feature dimension {row.size}, expected {dim}",
                [key],
            )
    features = np.vstack(rows) if dim else np.zeros((len(keys), 0))

    index = {key: i for i, key in enumerate(keys)}
    adjacency = np.zeros((len(keys), len(keys)), dtype=np.float64)
    for a, b in edges:
        if a == b:
            raise GraphBuildError(f"Self-edge on node {a!r}", [a])
        missing = [endpoint for endpoint in (a, b) if endpoint not in index]
        if missing:
            raise GraphBuildError(
                f"Edge ({a!r}, {b!r}) references unknown node(s) {missing}", missing
            )
        i, j = index[a], index[b]
        adjacency[i, j] = 1.0
        adjacency[j, i] = 1.0

    return Graph(keys, kinds, features, adjacency, label=label, graph_id=graph_id)
