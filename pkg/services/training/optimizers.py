"""First-order optimizers that update named parameter arrays in place."""

from typing import Dict

import numpy as np

from services.core.constants import (
    DEFAULT_ADAM_BETA1,
    DEFAULT_ADAM_BETA2,
    DEFAULT_ADAM_EPSILON,
    DEFAULT_LEARNING_RATE,
    DEFAULT_MOMENTUM,
)
from services.core.interfaces import FloatArray, IOptimizer


class Sgd(IOptimizer):
    """Stochastic gradient descent with classical momentum.

    ``v <- momentum * v + g``; ``theta <- theta - lr * v``.
    """

    def __init__(
        self,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        momentum: float = DEFAULT_MOMENTUM,
    ):
        self.learning_rate = learning_rate
        self.momentum = momentum
        self.steps = 0
        self._velocity: Dict[str, FloatArray] = {}

    def step(
        self, parameters: Dict[str, FloatArray], gradients: Dict[str, FloatArray]
    ) -> None:
        self.steps += 1
        for name, param in parameters.items():
            grad = gradients[name]
            if self.momentum:
                velocity = self._velocity.setdefault(name, np.zeros_like(param))
                velocity *= self.momentum
                velocity += grad
                grad = velocity
            param -= self.learning_rate * grad

    def state_dict(self) -> Dict[str, object]:
        return {
            "optimizer": "sgd",
            "learning_rate": self.learning_rate,
            "momentum": self.momentum,
            "steps": self.steps,
        }


class Adam(IOptimizer):
    """Adam with bias-corrected first and second moment estimates."""

    def __init__(
        self,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        beta1: float = DEFAULT_ADAM_BETA1,
        beta2: float = DEFAULT_ADAM_BETA2,
        epsilon: float = DEFAULT_ADAM_EPSILON,
    ):
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.steps = 0
        self._first: Dict[str, FloatArray] = {}
        self._second: Dict[str, FloatArray] = {}

    def step(
        self, parameters: Dict[str, FloatArray], gradients: Dict[str, FloatArray]
    ) -> None:
        self.steps += 1
        correction1 = 1.0 - self.beta1**self.steps
        correction2 = 1.0 - self.beta2**self.steps
        for name, param in parameters.items():
            grad = gradients[name]
            m = self._first.setdefault(name, np.zeros_like(param))
            v = self._second.setdefault(name, np.zeros_like(param))
            m *= self.beta1
            m += (1.0 - self.beta1) * grad
            v *= self.beta2
            v += (1.0 - self.beta2) * grad * grad
            param -= self.learning_rate * (m / correction1) / (
                np.sqrt(v / correction2) + self.epsilon
            )

    def state_dict(self) -> Dict[str, object]:
        return {
            "optimizer": "adam",
            "learning_rate": self.learning_rate,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "epsilon": self.epsilon,
            "steps": self.steps,
        }
