"""Trainable layers of the SGCNN.

Each layer owns its parameter arrays. ``parameters()`` hands out the arrays
themselves, not copies, so an optimizer updating them in place updates the
layer.
"""

import math
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from api.exceptions import ValidationError
from services.core.constants import PoolKind
from services.numerics.activations import Activation
from services.numerics.matrix import Matrix, Vector
from services.numerics.rng import Rng


def _uniform_init(rng: Rng, fan_in: int, shape) -> np.ndarray:
    bound = 1.0 / math.sqrt(fan_in)
    return np.asarray(rng.uniform(-bound, bound, shape), dtype=np.float64)


@dataclass
class AggregationLayer:
    """Per-hop weighted neighborhood aggregation.

    ``weights[j]`` scales the mean feature of the nodes ``j + 1`` hops away;
    ``bias`` holds a single shared scalar.
    """

    weights: Vector
    bias: Vector
    sigma: Activation = field(default_factory=Activation)
    pool: PoolKind = PoolKind.MEAN

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        self.bias = np.asarray(self.bias, dtype=np.float64).reshape(1)
        if self.weights.size < 1:
            raise ValidationError("Aggregation depth must be at least 1")

    @property
    def depth(self) -> int:
        return int(self.weights.size)

    @classmethod
    def initialize(
        cls, depth: int, sigma: Activation, pool: PoolKind, rng: Rng
    ) -> "AggregationLayer":
        return cls(
            weights=_uniform_init(rng.child("weights"), depth, (depth,)),
            bias=_uniform_init(rng.child("bias"), depth, (1,)),
            sigma=sigma,
            pool=pool,
        )

    def parameters(self) -> Dict[str, np.ndarray]:
        return {"weights": self.weights, "bias": self.bias}


@dataclass
class ConvLayer:
    """``C`` channels of ``k x k`` kernels applied to pooled attribute matrices."""

    kernels: np.ndarray
    biases: Vector
    phi: Activation = field(default_factory=Activation)

    def __post_init__(self):
        self.kernels = np.asarray(self.kernels, dtype=np.float64)
        self.biases = np.asarray(self.biases, dtype=np.float64).reshape(-1)
        if self.kernels.ndim != 3 or self.kernels.shape[1] != self.kernels.shape[2]:
            raise ValidationError(
                f"Kernels must have shape (C, k, k), got {self.kernels.shape}"
            )
        if self.kernels.shape[0] < 1 or self.kernels.shape[1] < 1:
            raise ValidationError("A convolution layer needs k >= 1 and C >= 1")
        if self.biases.shape != (self.kernels.shape[0],):
            raise ValidationError(
                f"Expected {self.kernels.shape[0]} biases, got {self.biases.shape[0]}"
            )

    @property
    def k(self) -> int:
        return int(self.kernels.shape[1])

    @property
    def channels(self) -> int:
        return int(self.kernels.shape[0])

    @classmethod
    def initialize(cls, k: int, channels: int, phi: Activation, rng: Rng) -> "ConvLayer":
        fan_in = k * k
        return cls(
            kernels=_uniform_init(rng.child("kernels"), fan_in, (channels, k, k)),
            biases=_uniform_init(rng.child("biases"), fan_in, (channels,)),
            phi=phi,
        )

    def parameters(self) -> Dict[str, np.ndarray]:
        return {"kernels": self.kernels, "biases": self.biases}


@dataclass
class ClassifierHead:
    """Linear map from the readout vector to class logits."""

    weight: Matrix
    bias: Vector

    def __post_init__(self):
        self.weight = np.asarray(self.weight, dtype=np.float64)
        self.bias = np.asarray(self.bias, dtype=np.float64).reshape(-1)
        if self.weight.ndim != 2 or self.weight.shape[1] < 2:
            raise ValidationError(
                f"Head weight must be (C, num_classes >= 2), got {self.weight.shape}"
            )
        if self.bias.shape != (self.weight.shape[1],):
            raise ValidationError(
                f"Head bias must have {self.weight.shape[1]} entries, got {self.bias.shape[0]}"
            )

    @property
    def num_classes(self) -> int:
        return int(self.weight.shape[1])

    @classmethod
    def initialize(cls, in_features: int, num_classes: int, rng: Rng) -> "ClassifierHead":
        return cls(
            weight=_uniform_init(rng.child("weight"), in_features, (in_features, num_classes)),
            bias=_uniform_init(rng.child("bias"), in_features, (num_classes,)),
        )

    def parameters(self) -> Dict[str, np.ndarray]:
        return {"weight": self.weight, "bias": self.bias}
