"""Ranked k-node pooling.

Pooling keeps the ``k`` highest-degree candidates, breaking ties by key, and
zero-pads when fewer than ``k`` candidates exist. Because node order is the key
order, "key ascending" is simply "index ascending".
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

import numpy as np
import numpy.typing as npt

from api.exceptions import ValidationError
from services.graph.property_graph import Graph
from services.numerics.matrix import Matrix


@dataclass(frozen=True)
class PoolSelection:
    indices: Tuple[int, ...]
    pad: int

    @property
    def size(self) -> int:
        return len(self.indices) + self.pad


def pool_select(g: Graph, candidate_indices: Iterable[int], k: int) -> PoolSelection:
    """Rank candidates by (degree descending, key ascending) and keep ``k``."""
    if k < 1:
        raise ValidationError(f"Pool size k must be at least 1, got {k}")
    candidates = sorted(set(int(i) for i in candidate_indices))
    for i in candidates:
        if not 0 <= i < g.num_nodes:
            raise ValidationError(
                f"Candidate index {i} out of range for a {g.num_nodes}-node graph"
            )
    ranked = sorted(candidates, key=lambda i: (-int(g.degree[i]), i))[:k]
    return PoolSelection(indices=tuple(ranked), pad=max(0, k - len(candidates)))


def induced_adjacency(g: Graph, sel: PoolSelection) -> Matrix:
    """Adjacency restricted to the selection, in selection order, zero-padded."""
    k = sel.size
    out = np.zeros((k, k), dtype=np.float64)
    idx = list(sel.indices)
    m = len(idx)
    if m:
        out[:m, :m] = g.adjacency[np.ix_(idx, idx)]
    return out


def closed_neighborhood_selections(g: Graph, k: int) -> List[PoolSelection]:
    """For every node, the pooled selection over itself and its neighbors."""
    return [pool_select(g, [v] + g.neighbors(v), k) for v in range(g.num_nodes)]


def global_selection(g: Graph, k: int) -> PoolSelection:
    """Pooled selection over all nodes, used by the graph-level readout."""
    return pool_select(g, range(g.num_nodes), k)


def stack_selections(
    selections: List[PoolSelection], k: int
) -> Tuple[npt.NDArray[np.int64], Matrix]:
    """Pack selections into gather indices and a padding mask.

    Returns ``(indices, mask)``, both of shape ``(len(selections), k)``. Padded
    slots point at node 0 and carry mask 0, so gathered values there must be
    multiplied by the mask.
    """
    indices = np.zeros((len(selections), k), dtype=np.int64)
    mask = np.zeros((len(selections), k), dtype=np.float64)
    for row, sel in enumerate(selections):
        m = len(sel.indices)
        indices[row, :m] = sel.indices
        mask[row, :m] = 1.0
    return indices, mask
