"""Hyperparameter and training configuration documents.

Both are loaded from JSON files and then overridden field by field from CLI
flags, so every field has a default.
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from services.core.constants import (
    DEFAULT_ACTIVATION,
    DEFAULT_ADAM_BETA1,
    DEFAULT_ADAM_BETA2,
    DEFAULT_ADAM_EPSILON,
    DEFAULT_BATCH_SIZE,
    DEFAULT_CHANNELS,
    DEFAULT_EMBED_DIM,
    DEFAULT_EPOCHS,
    DEFAULT_HOP_CAP,
    DEFAULT_KERNEL_SIZE,
    DEFAULT_LEARNING_RATE,
    DEFAULT_MOMENTUM,
    DEFAULT_OPTIMIZER,
    DEFAULT_POOL,
    DEFAULT_SEARCH_DEPTH,
    DEFAULT_SPLIT_FRACTION,
    DEFAULT_VALIDATION_FRACTION,
    ActivationKind,
    OptimizerKind,
    PoolKind,
)


class SgcnnConfig(BaseModel):
    """Architecture of an SGCNN model.

    ``channels`` has one entry per convolution layer; the last layer is the
    graph-level readout.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    embed_dim: int = Field(default=DEFAULT_EMBED_DIM, ge=2)
    search_depth: int = Field(default=DEFAULT_SEARCH_DEPTH, ge=1)
    hop_cap: int = Field(default=DEFAULT_HOP_CAP, ge=1)
    aggregation_pool: PoolKind = DEFAULT_POOL
    sigma: ActivationKind = DEFAULT_ACTIVATION
    phi: ActivationKind = DEFAULT_ACTIVATION
    kernel_size: int = Field(default=DEFAULT_KERNEL_SIZE, ge=1)
    channels: Tuple[int, ...] = Field(default=DEFAULT_CHANNELS, min_length=1)
    labels: Tuple[str, ...]

    @field_validator("channels")
    @classmethod
    def _positive_channels(cls, channels: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(c < 1 for c in channels):
            raise ValueError("every layer needs at least one channel")
        return channels

    @field_validator("labels")
    @classmethod
    def _sorted_labels(cls, labels: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(labels) < 2:
            raise ValueError("a classifier needs at least two labels")
        if list(labels) != sorted(set(labels)):
            raise ValueError("labels must be sorted and unique")
        return labels

    @property
    def num_layers(self) -> int:
        return len(self.channels)


class TrainConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    epochs: int = Field(default=DEFAULT_EPOCHS, ge=0)
    batch_size: int = Field(default=DEFAULT_BATCH_SIZE, ge=1)
    optimizer: OptimizerKind = DEFAULT_OPTIMIZER
    learning_rate: float = Field(default=DEFAULT_LEARNING_RATE, ge=0.0)
    momentum: float = Field(default=DEFAULT_MOMENTUM, ge=0.0, lt=1.0)
    beta1: float = Field(default=DEFAULT_ADAM_BETA1, ge=0.0, lt=1.0)
    beta2: float = Field(default=DEFAULT_ADAM_BETA2, ge=0.0, lt=1.0)
    epsilon: float = Field(default=DEFAULT_ADAM_EPSILON, gt=0.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    split_fraction: float = Field(default=DEFAULT_SPLIT_FRACTION, gt=0.0, lt=1.0)
    validation_fraction: float = Field(default=DEFAULT_VALIDATION_FRACTION, gt=0.0, lt=1.0)
    early_stop_patience: Optional[int] = Field(default=None, ge=1)
