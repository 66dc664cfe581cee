"""Small graphs and models shared across the test suite."""

from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from data.models.configs import SgcnnConfig
from services.graph.property_graph import Graph, build_graph
from services.numerics.rng import Rng
from services.sgcnn.model import SgcnnModel


def node_key(index: int) -> str:
    """Zero-padded key, so key order and index order agree."""
    return f"n{index:02d}"


def make_graph(
    features: Sequence[Sequence[float]],
    edges: Iterable[Tuple[int, int]] = (),
    label: Optional[str] = None,
    graph_id: str = "g",
) -> Graph:
    features = np.asarray(features, dtype=np.float64)
    nodes = [(node_key(i), "part", features[i]) for i in range(features.shape[0])]
    return build_graph(
        nodes,
        [(node_key(a), node_key(b)) for a, b in edges],
        label=label,
        graph_id=graph_id,
    )


def random_graph(
    generator: np.random.Generator,
    num_nodes: int,
    feature_dim: int,
    edge_probability: float = 0.4,
    label: Optional[str] = None,
    graph_id: str = "g",
) -> Graph:
    features = generator.normal(size=(num_nodes, feature_dim))
    edges = [
        (i, j)
        for i in range(num_nodes)
        for j in range(i + 1, num_nodes)
        if generator.random() < edge_probability
    ]
    return make_graph(features, edges, label=label, graph_id=graph_id)


def small_config(**overrides) -> SgcnnConfig:
    values = {
        "embed_dim": 3,
        "search_depth": 2,
        "hop_cap": 4,
        "kernel_size": 3,
        "channels": (3, 2),
        "labels": ("a", "b", "c"),
        "sigma": "tanh",
        "phi": "tanh",
    }
    values.update(overrides)
    return SgcnnConfig(**values)


def small_model(seed: int = 0, **overrides) -> SgcnnModel:
    return SgcnnModel.initialize(small_config(**overrides), Rng(seed))
