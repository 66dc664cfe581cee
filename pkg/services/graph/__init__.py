from services.graph.pooling import (
    PoolSelection,
    closed_neighborhood_selections,
    global_selection,
    induced_adjacency,
    pool_select,
    stack_selections,
)
from services.graph.property_graph import (
    Graph,
    GraphBuildError,
    Node,
    build_graph,
)
from services.graph.sampling import (
    NeighborhoodSample,
    bfs_layers,
    neighborhood_sample,
    sample_all,
)

__all__ = [
    "Graph",
    "GraphBuildError",
    "NeighborhoodSample",
    "Node",
    "PoolSelection",
    "bfs_layers",
    "build_graph",
    "closed_neighborhood_selections",
    "global_selection",
    "induced_adjacency",
    "neighborhood_sample",
    "pool_select",
    "sample_all",
    "stack_selections",
]
