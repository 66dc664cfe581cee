"""Early stopping on held-out loss."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np


@dataclass
class EpochObservation:
    """Held-out loss recorded for one epoch."""

    epoch: int
    loss: float
    improved: bool

    def to_dict(self) -> dict:
        return {"epoch": self.epoch, "loss": self.loss, "improved": self.improved}


@dataclass
class EarlyStoppingTracker:
    """Tracks the best held-out loss and the parameters that produced it.

    ``should_stop`` turns true once ``patience`` consecutive epochs have failed
    to improve on the best loss. With ``patience=None`` it never does. Parameters
    are snapshotted only when ``observe`` is given them.
    """

    patience: Optional[int] = None
    best_loss: float = float("inf")
    best_epoch: Optional[int] = None
    best_parameters: Optional[Dict[str, np.ndarray]] = None
    history: List[EpochObservation] = field(default_factory=list)
    _stale_epochs: int = 0

    def observe(
        self, epoch: int, loss: float, parameters: Optional[Dict[str, np.ndarray]] = None
    ) -> bool:
        """Record ``loss``; return whether it improved on the best so far."""
        improved = loss < self.best_loss
        if improved:
            self.best_loss = loss
            self.best_epoch = epoch
            if parameters is not None:
                self.best_parameters = {name: a.copy() for name, a in parameters.items()}
            self._stale_epochs = 0
        else:
            self._stale_epochs += 1
        self.history.append(EpochObservation(epoch=epoch, loss=loss, improved=improved))
        return improved

    @property
    def should_stop(self) -> bool:
        return self.patience is not None and self._stale_epochs >= self.patience

    def summary(self) -> dict:
        return {
            "patience": self.patience,
            "best_epoch": self.best_epoch,
            "best_loss": None if self.best_epoch is None else self.best_loss,
            "stopped_early": self.should_stop,
        }
