"""Serializers for the JSON documents the CLI writes.

Each serializer is a pydantic model: ``from_*`` builds it from a domain object,
``model_dump(mode="json")`` produces the document, and ``model_validate``
checks a document read back from disk.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from services.core.constants import REPORT_FORMAT_VERSION
from services.search.similarity import QueryResult
from services.sgcnn.network import Prediction
from services.training.metrics import Metrics
from services.training.trainer import TrainReport


class MetricsSerializer(BaseModel):
    """Loss, accuracy, confusion matrix and per-class recall over one set."""

    model_config = ConfigDict(extra="forbid")

    loss: float
    accuracy: float = Field(ge=0.0, le=1.0)
    confusion: List[List[int]]
    per_class_recall: List[float]
    labels: List[str]

    @model_validator(mode="after")
    def _square_confusion(self) -> "MetricsSerializer":
        size = len(self.labels)
        if len(self.confusion) != size or any(len(row) != size for row in self.confusion):
            raise ValueError(f"confusion must be {size}x{size}")
        if len(self.per_class_recall) != size:
            raise ValueError(f"per_class_recall must have {size} entries")
        return self

    @classmethod
    def from_metrics(cls, metrics: Metrics) -> "MetricsSerializer":
        return cls.model_validate(metrics.to_dict())

    def to_metrics(self) -> Metrics:
        return Metrics.from_dict(self.model_dump())


class EvaluationSerializer(BaseModel):
    format_version: int = REPORT_FORMAT_VERSION
    kind: str = "metrics"
    graphs_file: str
    checkpoint: str
    metrics: MetricsSerializer


class EpochSerializer(BaseModel):
    epoch: int = Field(ge=1)
    train: MetricsSerializer
    held_out: Optional[MetricsSerializer] = None


class TrainReportSerializer(BaseModel):
    """Per-epoch metrics plus the configuration that produced them.

    Only seeded quantities are recorded, so identical runs write identical
    bytes; wall-clock time goes to the log instead.
    """

    format_version: int = REPORT_FORMAT_VERSION
    kind: str = "train-report"
    status: str
    checkpoint: str
    architecture: Dict[str, object]
    train_config: Dict[str, object]
    optimizer_state: Dict[str, object]
    early_stopping: Dict[str, object]
    epochs: List[EpochSerializer]
    final_test: Optional[MetricsSerializer] = None
    held_out_set: Optional[str] = None
    split_sizes: Dict[str, int] = Field(default_factory=dict)
    failure: Optional[Dict[str, int]] = None

    @classmethod
    def from_report(
        cls,
        report: TrainReport,
        checkpoint: str,
        final_test: Optional[Metrics] = None,
        held_out_set: Optional[str] = None,
        split_sizes: Optional[Dict[str, int]] = None,
    ) -> "TrainReportSerializer":
        return cls(
            status=report.status,
            checkpoint=checkpoint,
            architecture=report.model.config.model_dump(mode="json"),
            train_config=report.config.model_dump(mode="json"),
            optimizer_state=report.optimizer_state,
            early_stopping=report.early_stopping,
            epochs=[EpochSerializer.model_validate(e.to_dict()) for e in report.epochs],
            final_test=None if final_test is None else MetricsSerializer.from_metrics(final_test),
            held_out_set=held_out_set,
            split_sizes=split_sizes or {},
            failure=report.failure,
        )


class PredictionSerializer(BaseModel):
    id: str
    label: Optional[str]
    predicted: str
    probabilities: Dict[str, float]

    @classmethod
    def from_prediction(
        cls, graph_id: str, label: Optional[str], prediction: Prediction, labels
    ) -> "PredictionSerializer":
        return cls(
            id=graph_id,
            label=label,
            predicted=prediction.label,
            probabilities={
                name: float(p) for name, p in zip(labels, prediction.probabilities)
            },
        )


class NeighborSerializer(BaseModel):
    id: str
    similarity: float
    predicted: str


class QueryResultSerializer(BaseModel):
    format_version: int = REPORT_FORMAT_VERSION
    kind: str = "query"
    anchor: str
    results: List[NeighborSerializer]

    @model_validator(mode="after")
    def _ranked(self) -> "QueryResultSerializer":
        scores = [r.similarity for r in self.results]
        if any(a < b for a, b in zip(scores, scores[1:])):
            raise ValueError("results must be ordered by non-increasing similarity")
        return self

    @classmethod
    def from_result(cls, result: QueryResult) -> "QueryResultSerializer":
        return cls.model_validate(result.to_dict())
