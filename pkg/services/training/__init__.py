from services.training.metrics import (
    Metrics,
    compute_metrics,
    evaluate,
    format_metrics_table,
)
from services.training.optimizers import Adam, Sgd
from services.training.splitting import stratified_split
from services.training.trainer import (
    EpochRecord,
    NonFiniteLossError,
    TrainReport,
    train,
)

__all__ = [
    "Adam",
    "EpochRecord",
    "Metrics",
    "NonFiniteLossError",
    "Sgd",
    "TrainReport",
    "compute_metrics",
    "evaluate",
    "format_metrics_table",
    "stratified_split",
    "train",
]
