"""Abstract base classes and interfaces for the design-twin services.

This module defines the seams where one implementation can be swapped for
another: the text embedder used by graph formation, the optimizer used by the
trainer.
"""

from abc import ABC, abstractmethod
from typing import Dict

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]


class ITextEmbedder(ABC):
    """Maps free text to a fixed-dimension feature vector."""

    @property
    @abstractmethod
    def dim(self) -> int:
        """Dimension of every vector this embedder returns."""

    @abstractmethod
    def embed(self, text: str) -> FloatArray:
        """Embed ``text``; equal text must give equal vectors."""


class IOptimizer(ABC):
    """Updates parameter arrays in place from their gradients."""

    @abstractmethod
    def step(
        self, parameters: Dict[str, FloatArray], gradients: Dict[str, FloatArray]
    ) -> None:
        """Apply one update.

        Args:
            parameters: Named parameter arrays, modified in place
            gradients: Gradients with the same names and shapes
        """

    @abstractmethod
    def state_dict(self) -> Dict[str, object]:
        """Return the optimizer's hyperparameters and step count."""
