"""Mini-batch training loop."""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from tqdm import tqdm

from api.exceptions import NumericalError, ValidationError
from data.models.configs import TrainConfig
from services.core.factories import OptimizerFactory
from services.graph.property_graph import Graph
from services.numerics.rng import Rng
from services.sgcnn.model import Gradients, SgcnnModel
from services.sgcnn.network import UnknownLabelError, loss_and_gradients
from services.tracking.early_stopping import EarlyStoppingTracker
from services.training.metrics import Metrics, evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    train: Metrics
    held_out: Optional[Metrics] = None

    def to_dict(self) -> dict:
        return {
            "epoch": self.epoch,
            "train": self.train.to_dict(),
            "held_out": None if self.held_out is None else self.held_out.to_dict(),
        }


@dataclass
class TrainReport:
    """Outcome of one :func:`train` call.

    ``status`` is ``"completed"``, ``"stopped_early"`` or ``"non_finite"``.
    ``model`` is the trained model object itself and is not serialized.
    """

    config: TrainConfig
    model: SgcnnModel
    epochs: List[EpochRecord] = field(default_factory=list)
    wall_seconds: float = 0.0
    status: str = "completed"
    optimizer_state: dict = field(default_factory=dict)
    early_stopping: dict = field(default_factory=dict)
    failure: Optional[dict] = None

    @property
    def final_train(self) -> Optional[Metrics]:
        return self.epochs[-1].train if self.epochs else None

    @property
    def final_held_out(self) -> Optional[Metrics]:
        return self.epochs[-1].held_out if self.epochs else None


class NonFiniteLossError(NumericalError):
    """Training produced a NaN or infinite loss or gradient."""

    def __init__(self, epoch: int, batch: int, report: TrainReport):
        super().__init__(
            f"Non-finite loss at epoch {epoch}, batch {batch}; training aborted",
            details={"epoch": epoch, "batch": batch},
        )
        self.epoch = epoch
        self.batch = batch
        self.report = report


def _check_labels(model: SgcnnModel, samples: Sequence[Graph]) -> None:
    unknown = [str(s.label) for s in samples if s.label not in model.labels]
    if unknown:
        raise UnknownLabelError(unknown, model.labels)


def train(
    model: SgcnnModel,
    train_set: Sequence[Graph],
    config: TrainConfig,
    held_out: Optional[Sequence[Graph]] = None,
    progress: bool = False,
) -> TrainReport:
    """Train ``model`` in place with mini-batch gradient descent.

    Each epoch visits ``train_set`` in a seeded permutation. Gradients within a
    batch are averaged in sample order before one optimizer step. When
    ``held_out`` is given it is evaluated after every epoch and drives early
    stopping; with ``early_stop_patience`` set, the parameters of the best
    held-out epoch are restored at the end.
    """
    report = TrainReport(config=config, model=model)
    if config.epochs == 0:
        logger.info("Zero epochs requested; model left unchanged")
        return report
    if not train_set:
        raise ValidationError("Cannot train on an empty set")
    _check_labels(model, train_set)
    if held_out:
        _check_labels(model, held_out)

    started = time.perf_counter()
    optimizer = OptimizerFactory.create_optimizer(config)
    tracker = EarlyStoppingTracker(patience=config.early_stop_patience)
    restores_best = config.early_stop_patience is not None
    train_plans = [model.plan(g) for g in train_set]
    held_out_plans = [model.plan(g) for g in held_out] if held_out else None
    rng = Rng(config.seed).child("train")

    epochs = tqdm(
        range(1, config.epochs + 1), desc="Training", unit="epoch", disable=not progress
    )
    for epoch in epochs:
        order = rng.child(f"epoch.{epoch}").permutation(len(train_set))
        for batch_index, start in enumerate(range(0, len(order), config.batch_size)):
            batch = order[start : start + config.batch_size]
            gradients = Gradients.zeros_like(model)
            for i in batch:
                loss, _, sample_gradients = loss_and_gradients(
                    model, train_set[i], train_plans[i]
                )
                if not math.isfinite(loss) or not sample_gradients.is_finite():
                    report.status = "non_finite"
                    report.failure = {"epoch": epoch, "batch": batch_index}
                    report.wall_seconds = time.perf_counter() - started
                    report.optimizer_state = optimizer.state_dict()
                    raise NonFiniteLossError(epoch, batch_index, report)
                gradients.add(sample_gradients)
            model.apply_gradients(optimizer, gradients.scale(1.0 / len(batch)))

        train_metrics = evaluate(model, train_set, train_plans)
        held_out_metrics = (
            evaluate(model, held_out, held_out_plans) if held_out else None
        )
        report.epochs.append(EpochRecord(epoch, train_metrics, held_out_metrics))
        message = (
            f"Epoch {epoch}/{config.epochs}: loss={train_metrics.loss:.4f} "
            f"accuracy={train_metrics.accuracy:.4f}"
        )
        if held_out_metrics is not None:
            message += (
                f" held_out_loss={held_out_metrics.loss:.4f}"
                f" held_out_accuracy={held_out_metrics.accuracy:.4f}"
            )
            tracker.observe(
                epoch,
                held_out_metrics.loss,
                model.parameters() if restores_best else None,
            )
        logger.info(message)
        epochs.set_postfix(loss=f"{train_metrics.loss:.4f}")
        if tracker.should_stop:
            logger.info(
                f"Stopping early at epoch {epoch}; best held-out loss "
                f"{tracker.best_loss:.4f} at epoch {tracker.best_epoch}"
            )
            report.status = "stopped_early"
            break

    if restores_best and tracker.best_parameters is not None:
        model.load_parameters(tracker.best_parameters)
    report.wall_seconds = time.perf_counter() - started
    report.optimizer_state = optimizer.state_dict()
    report.early_stopping = tracker.summary()
    logger.info(
        f"Training {report.status} after {len(report.epochs)} epochs "
        f"in {report.wall_seconds:.2f}s"
    )
    return report
