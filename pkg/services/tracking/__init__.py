"""Training-progress tracking."""

from services.tracking.early_stopping import EarlyStoppingTracker, EpochObservation

__all__ = ["EarlyStoppingTracker", "EpochObservation"]
