from api.serializers.report_serializers import (
    EpochSerializer,
    EvaluationSerializer,
    MetricsSerializer,
    NeighborSerializer,
    PredictionSerializer,
    QueryResultSerializer,
    TrainReportSerializer,
)

__all__ = [
    "EpochSerializer",
    "EvaluationSerializer",
    "MetricsSerializer",
    "NeighborSerializer",
    "PredictionSerializer",
    "QueryResultSerializer",
    "TrainReportSerializer",
]
