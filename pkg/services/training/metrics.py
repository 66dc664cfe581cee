"""Classification metrics and the forward-only evaluation pass."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sklearn.metrics import confusion_matrix

from api.exceptions import ValidationError
from services.graph.property_graph import Graph
from services.sgcnn.model import SgcnnModel
from services.sgcnn.network import UnknownLabelError, forward, one_hot
from services.sgcnn.operations import cross_entropy
from services.sgcnn.plan import GraphPlan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Metrics:
    """Mean loss, accuracy and confusion counts over one labeled set.

    ``confusion[i][j]`` counts samples of ``labels[i]`` predicted as
    ``labels[j]``.
    """

    loss: float
    accuracy: float
    confusion: Tuple[Tuple[int, ...], ...]
    per_class_recall: Tuple[float, ...]
    labels: Tuple[str, ...]

    @property
    def total(self) -> int:
        return int(sum(sum(row) for row in self.confusion))

    def to_dict(self) -> dict:
        return {
            "loss": self.loss,
            "accuracy": self.accuracy,
            "confusion": [list(row) for row in self.confusion],
            "per_class_recall": list(self.per_class_recall),
            "labels": list(self.labels),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Metrics":
        return cls(
            loss=float(data["loss"]),
            accuracy=float(data["accuracy"]),
            confusion=tuple(tuple(int(c) for c in row) for row in data["confusion"]),
            per_class_recall=tuple(float(r) for r in data["per_class_recall"]),
            labels=tuple(data["labels"]),
        )


def compute_metrics(
    labels: Sequence[str],
    true_indices: Sequence[int],
    predicted_indices: Sequence[int],
    losses: Sequence[float],
) -> Metrics:
    if not true_indices:
        raise ValidationError("Cannot compute metrics over an empty set")
    confusion = confusion_matrix(
        true_indices, predicted_indices, labels=list(range(len(labels)))
    )
    support = confusion.sum(axis=1)
    recall = np.divide(
        np.diag(confusion),
        support,
        out=np.zeros(len(labels), dtype=np.float64),
        where=support > 0,
    )
    return Metrics(
        loss=float(np.mean(losses)),
        accuracy=float(np.trace(confusion)) / float(confusion.sum()),
        confusion=tuple(tuple(int(c) for c in row) for row in confusion),
        per_class_recall=tuple(float(r) for r in recall),
        labels=tuple(labels),
    )


def evaluate(
    model: SgcnnModel,
    samples: Sequence[Graph],
    plans: Optional[Sequence[GraphPlan]] = None,
) -> Metrics:
    """Forward-only pass over ``samples``.

    ``plans``, when given, holds one precomputed plan per sample.
    """
    if not samples:
        raise ValidationError("Cannot evaluate on an empty set")
    unknown = [s.label for s in samples if s.label not in model.labels]
    if unknown:
        raise UnknownLabelError([str(label) for label in unknown], model.labels)

    true_indices: List[int] = []
    predicted: List[int] = []
    losses: List[float] = []
    for i, sample in enumerate(samples):
        plan = plans[i] if plans is not None else None
        probabilities, _ = forward(model, sample, plan)
        y = one_hot(sample.label, model.labels)
        true_indices.append(int(np.argmax(y)))
        predicted.append(int(np.argmax(probabilities)))
        losses.append(cross_entropy(y, probabilities))
    metrics = compute_metrics(model.labels, true_indices, predicted, losses)
    logger.debug(
        f"Evaluated {len(samples)} samples: loss={metrics.loss:.4f} "
        f"accuracy={metrics.accuracy:.4f}"
    )
    return metrics


def format_metrics_table(metrics: Metrics) -> str:
    """Fixed-column per-class table followed by the overall line."""
    width = max(12, max(len(label) for label in metrics.labels) + 2)
    lines = [f"{'label':<{width}}{'support':>9}{'correct':>9}{'recall':>9}"]
    for i, label in enumerate(metrics.labels):
        support = sum(metrics.confusion[i])
        lines.append(
            f"{label:<{width}}{support:>9d}{metrics.confusion[i][i]:>9d}"
            f"{metrics.per_class_recall[i]:>9.4f}"
        )
    correct = sum(metrics.confusion[i][i] for i in range(len(metrics.labels)))
    lines.append(
        f"{'overall':<{width}}{metrics.total:>9d}{correct:>9d}{metrics.accuracy:>9.4f}"
    )
    lines.append(f"{'loss':<{width}}{metrics.loss:>27.6f}")
    return "\n".join(lines)
