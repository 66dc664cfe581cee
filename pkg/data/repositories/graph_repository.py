"""Canonical subgraph file.

JSON-lines, UTF-8, keys sorted. The header line is
``{"embed_dim": f, "format_version": 1, "kind": "subgraphs"}``; each following
line is one labeled subgraph::

    {"edges": [[0, 2], [1, 2]],
     "id": "car-00000",
     "label": "Car",
     "nodes": [{"feature": [0.5, ...], "key": "part:door", "kind": "part"}, ...]}

Nodes are listed in canonical (key) order and edges as index pairs ``i < j`` into
that list. Features are written with round-trip float precision.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

import orjson

from api.exceptions import ValidationError
from services.core.constants import GRAPHS_FORMAT_VERSION
from services.graph.property_graph import Graph, build_graph
from services.utils.file_io import atomic_write_lines

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class GraphFileError(ValidationError):
    """A subgraph file could not be parsed."""

    def __init__(self, path: PathLike, offset: int, reason: str):
        super().__init__(
            f"{path}: byte offset {offset}: {reason}",
            details={"path": str(path), "offset": offset},
        )
        self.offset = offset


def graph_to_dict(g: Graph) -> dict:
    return {
        "id": g.graph_id,
        "label": g.label,
        "nodes": [
            {"key": key, "kind": kind, "feature": g.features[i].tolist()}
            for i, (key, kind) in enumerate(zip(g.keys, g.kinds))
        ],
        "edges": [list(edge) for edge in g.edges()],
    }


def graph_from_dict(data: dict) -> Graph:
    nodes = data["nodes"]
    keys = [node["key"] for node in nodes]
    specs = [(node["key"], node["kind"], node["feature"]) for node in nodes]
    edges = [(keys[i], keys[j]) for i, j in data["edges"]]
    return build_graph(specs, edges, label=data.get("label"), graph_id=data["id"])


def save_graphs(graphs: List[Graph], path: PathLike) -> None:
    embed_dim = graphs[0].feature_dim if graphs else 0
    header = {
        "format_version": GRAPHS_FORMAT_VERSION,
        "kind": "subgraphs",
        "embed_dim": embed_dim,
    }
    lines = [orjson.dumps(header, option=orjson.OPT_SORT_KEYS)]
    lines.extend(
        orjson.dumps(graph_to_dict(g), option=orjson.OPT_SORT_KEYS) for g in graphs
    )
    atomic_write_lines(path, lines)
    logger.info(f"Saved {len(graphs)} subgraphs to {path}")


def load_graphs(path: PathLike) -> Tuple[List[Graph], Optional[int]]:
    """Load subgraphs and the header's embedding dimension.

    Raises :class:`GraphFileError` naming the byte offset of the first bad line.
    """
    with open(path, "rb") as handle:
        content = handle.read()

    graphs: List[Graph] = []
    embed_dim: Optional[int] = None
    offset = 0
    for number, raw in enumerate(content.split(b"\n")):
        line_offset = offset
        offset += len(raw) + 1
        if not raw.strip():
            continue
        try:
            data = orjson.loads(raw)
        except orjson.JSONDecodeError as exc:
            raise GraphFileError(path, line_offset + exc.pos, exc.msg) from None
        if number == 0:
            embed_dim = _check_header(path, data)
            continue
        try:
            graph = graph_from_dict(data)
        except ValidationError as exc:
            raise GraphFileError(path, line_offset, exc.user_message) from None
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise GraphFileError(path, line_offset, f"malformed subgraph: {exc!r}") from None
        if embed_dim and graph.feature_dim != embed_dim:
            raise GraphFileError(
                path,
                line_offset,
                f"feature dimension {graph.feature_dim} != header {embed_dim}",
            )
        graphs.append(graph)

    if embed_dim is None:
        raise GraphFileError(path, 0, "missing header line")
    logger.info(f"Loaded {len(graphs)} subgraphs from {path}")
    return graphs, embed_dim


def _check_header(path: PathLike, data) -> int:
    if not isinstance(data, dict) or data.get("kind") != "subgraphs":
        raise GraphFileError(path, 0, "missing subgraph header")
    if data.get("format_version") != GRAPHS_FORMAT_VERSION:
        raise GraphFileError(
            path, 0, f"unsupported format_version {data.get('format_version')!r}"
        )
    return int(data.get("embed_dim", 0))
