"""Per-graph index structures reused by every forward and backward pass.

Coarsening layers inherit the input adjacency, so degrees never change and the
pooled selections are the same at every layer. Everything that depends only on
topology is computed here once per (graph, architecture) pair.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
import numpy.typing as npt

from services.graph.pooling import (
    closed_neighborhood_selections,
    global_selection,
    stack_selections,
)
from services.graph.property_graph import Graph
from services.graph.sampling import NeighborhoodSample, sample_all
from services.numerics.matrix import Matrix
from services.numerics.rng import Rng

IndexArray = npt.NDArray[np.int64]


def hop_mean_operators(
    samples: List[NeighborhoodSample], num_nodes: int, depth: int
) -> np.ndarray:
    """Stack of ``depth`` row-averaging matrices, shape ``(depth, n, n)``.

    Row ``v`` of operator ``j`` averages the nodes sampled ``j + 1`` hops from
    ``v``; an empty hop gives a zero row.
    """
    operators = np.zeros((depth, num_nodes, num_nodes), dtype=np.float64)
    for sample in samples:
        for j, hop in enumerate(sample.per_hop[:depth]):
            if hop:
                operators[j, sample.center, list(hop)] = 1.0 / len(hop)
    return operators


@dataclass(frozen=True)
class GraphPlan:
    """Topology-derived arrays for one graph.

    ``node_indices``/``node_mask`` are ``(n, k)``: the pooled closed
    neighborhood of every node. ``global_indices``/``global_mask`` are ``(k,)``:
    the pooled selection the readout uses.
    """

    hop_operators: np.ndarray
    closed_mask: Matrix
    node_indices: IndexArray
    node_mask: Matrix
    global_indices: IndexArray
    global_mask: Matrix

    @property
    def num_nodes(self) -> int:
        return int(self.closed_mask.shape[0])

    @property
    def k(self) -> int:
        return int(self.global_indices.shape[0])

    @property
    def node_pair_mask(self) -> np.ndarray:
        return self.node_mask[:, :, None] * self.node_mask[:, None, :]

    @property
    def global_pair_mask(self) -> Matrix:
        return np.outer(self.global_mask, self.global_mask)

    @classmethod
    def build(
        cls,
        g: Graph,
        depth: int,
        hop_cap: int,
        k: int,
        rng: Optional[Rng] = None,
    ) -> "GraphPlan":
        samples = sample_all(g, depth, hop_cap, rng)
        node_indices, node_mask = stack_selections(closed_neighborhood_selections(g, k), k)
        global_indices, global_mask = stack_selections([global_selection(g, k)], k)
        return cls(
            hop_operators=hop_mean_operators(samples, g.num_nodes, depth),
            closed_mask=g.adjacency + np.eye(g.num_nodes),
            node_indices=node_indices,
            node_mask=node_mask,
            global_indices=global_indices[0],
            global_mask=global_mask[0],
        )
