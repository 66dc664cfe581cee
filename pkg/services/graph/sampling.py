"""Breadth-first neighborhood sampling."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from api.exceptions import ValidationError
from services.graph.property_graph import Graph
from services.numerics.rng import Rng


@dataclass(frozen=True)
class NeighborhoodSample:
    """Nodes around ``center`` grouped by shortest-path distance.

    ``per_hop[j - 1]`` lists node indices at distance exactly ``j``, in
    canonical order, possibly truncated to the per-hop cap.
    """

    center: int
    per_hop: Tuple[Tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.per_hop)


def bfs_layers(g: Graph, center: int, depth: int) -> List[List[int]]:
    """Full shortest-path layers ``1..depth`` around ``center``."""
    visited = np.zeros(g.num_nodes, dtype=bool)
    visited[center] = True
    frontier = [center]
    layers: List[List[int]] = []
    for _ in range(depth):
        reached = set()
        for node in frontier:
            for neighbor in g.neighbors(node):
                if not visited[neighbor]:
                    reached.add(neighbor)
        layer = sorted(reached)
        visited[layer] = True
        layers.append(layer)
        frontier = layer
    return layers


def neighborhood_sample(
    g: Graph, center: int, d: int, cap: int, rng: Optional[Rng] = None
) -> NeighborhoodSample:
    """Sample up to ``cap`` nodes at each distance ``1..d`` from ``center``.

    Without ``rng`` the first ``cap`` nodes of each layer in key order are kept.
    With ``rng`` each layer is subsampled uniformly without replacement. Distances
    are always computed on the full graph, so truncation never shifts a node to a
    later hop.
    """
    if not 0 <= center < g.num_nodes:
        raise ValidationError(
            f"Center index {center} out of range for a {g.num_nodes}-node graph"
        )
    if d < 1 or cap < 1:
        raise ValidationError(f"Depth and cap must be at least 1 (got d={d}, cap={cap})")

    hops = []
    for layer in bfs_layers(g, center, d):
        if len(layer) > cap:
            if rng is None:
                layer = layer[:cap]
            else:
                layer = sorted(rng.sample(layer, cap))
        hops.append(tuple(layer))
    return NeighborhoodSample(center=center, per_hop=tuple(hops))


def sample_all(
    g: Graph, d: int, cap: int, rng: Optional[Rng] = None
) -> List[NeighborhoodSample]:
    """One sample per node, in node order."""
    return [neighborhood_sample(g, i, d, cap, rng) for i in range(g.num_nodes)]
