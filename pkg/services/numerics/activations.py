"""Activation functions with analytic derivatives."""

from dataclasses import dataclass
from typing import Union

import numpy as np

from services.core.constants import ActivationKind
from services.numerics.matrix import Matrix


@dataclass(frozen=True)
class Activation:
    """An elementwise non-linearity and its derivative.

    ``derivative`` takes the pre-activation input, not the output.
    """

    kind: ActivationKind = ActivationKind.RELU

    @classmethod
    def of(cls, kind: Union[str, ActivationKind]) -> "Activation":
        return cls(ActivationKind(kind))

    def apply(self, z: Matrix) -> Matrix:
        if self.kind is ActivationKind.RELU:
            return np.maximum(z, 0.0)
        if self.kind is ActivationKind.TANH:
            return np.tanh(z)
        if self.kind is ActivationKind.SIGMOID:
            return _sigmoid(z)
        return np.array(z, dtype=np.float64, copy=True)

    def derivative(self, z: Matrix) -> Matrix:
        if self.kind is ActivationKind.RELU:
            return (np.asarray(z) > 0.0).astype(np.float64)
        if self.kind is ActivationKind.TANH:
            return 1.0 - np.tanh(z) ** 2
        if self.kind is ActivationKind.SIGMOID:
            s = _sigmoid(z)
            return s * (1.0 - s)
        return np.ones_like(z, dtype=np.float64)


def _sigmoid(z: Matrix) -> Matrix:
    # Split by sign so exp never overflows.
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    positive = z >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-z[positive]))
    exp_z = np.exp(z[~positive])
    out[~positive] = exp_z / (1.0 + exp_z)
    return out
