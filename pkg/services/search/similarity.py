"""Exact cosine search over graph-level embeddings."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from api.exceptions import ContentNotFoundError, ValidationError
from services.core.constants import DEFAULT_TOP_N
from services.graph.property_graph import Graph
from services.sgcnn.model import SgcnnModel
from services.sgcnn.network import forward

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Neighbor:
    product_id: str
    similarity: float
    predicted_label: str

    def to_dict(self) -> dict:
        return {
            "id": self.product_id,
            "similarity": self.similarity,
            "predicted": self.predicted_label,
        }


@dataclass(frozen=True)
class QueryResult:
    anchor_id: str
    results: Tuple[Neighbor, ...]

    def to_dict(self) -> dict:
        return {
            "anchor": self.anchor_id,
            "results": [neighbor.to_dict() for neighbor in self.results],
        }


def cosine_similarities(anchor: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """Cosine of ``anchor`` against each row; zero-norm vectors score 0."""
    norms = np.linalg.norm(vectors, axis=1) * np.linalg.norm(anchor)
    dots = vectors @ anchor
    return np.divide(dots, norms, out=np.zeros_like(dots), where=norms > 0.0)


def similarity_search(
    model: SgcnnModel,
    graphs: Sequence[Graph],
    like: str,
    top_n: int = DEFAULT_TOP_N,
) -> QueryResult:
    """Rank every other product by cosine similarity to ``like``.

    Ties are broken by product id ascending; the anchor never appears in its
    own results.
    """
    if top_n < 1:
        raise ValidationError(f"top_n must be at least 1, got {top_n}")
    ids = [g.graph_id for g in graphs]
    if like not in ids:
        raise ContentNotFoundError(f"Product id {like!r} not found among {len(ids)} graphs")

    predicted: List[str] = []
    rows = []
    for g in graphs:
        probabilities, cache = forward(model, g)
        rows.append(cache.readout)
        predicted.append(model.labels[int(np.argmax(probabilities))])
    embeddings = np.vstack(rows)

    anchor = ids.index(like)
    scores = cosine_similarities(embeddings[anchor], embeddings)
    ranked = sorted(
        (i for i in range(len(ids)) if i != anchor),
        key=lambda i: (-scores[i], ids[i]),
    )[:top_n]
    logger.debug(f"Query {like!r}: ranked {len(ids) - 1} candidates")
    return QueryResult(
        anchor_id=like,
        results=tuple(
            Neighbor(ids[i], float(scores[i]), predicted[i]) for i in ranked
        ),
    )
