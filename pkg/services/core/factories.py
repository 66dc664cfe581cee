"""Factory classes for creating pipeline components.

Imports are deferred to the factory methods so that modules low in the stack
(formation, sgcnn) can ask for a collaborator without importing the packages
that depend on them.
"""

from typing import cast

from data.models.configs import SgcnnConfig, TrainConfig
from services.core.constants import OptimizerKind
from services.core.interfaces import IOptimizer, ITextEmbedder
from services.numerics.rng import Rng


class EmbedderFactory:
    """Factory for text embedders used by graph formation."""

    _embedders: dict = {}

    @staticmethod
    def create_embedder(dim: int) -> ITextEmbedder:
        """Create or return the shared hashing embedder for ``dim``."""
        if dim not in EmbedderFactory._embedders:
            from services.formation.embedding import HashEmbedder

            EmbedderFactory._embedders[dim] = HashEmbedder(dim)
        return cast(ITextEmbedder, EmbedderFactory._embedders[dim])


class ModelFactory:
    @staticmethod
    def create_model(config: SgcnnConfig, rng: Rng):
        """Create a freshly initialized SGCNN model."""
        from services.sgcnn.model import SgcnnModel

        return SgcnnModel.initialize(config, rng.child("model"))


class OptimizerFactory:
    """Factory for optimizers named by ``TrainConfig.optimizer``."""

    @staticmethod
    def create_optimizer(config: TrainConfig) -> IOptimizer:
        from services.training.optimizers import Adam, Sgd

        if config.optimizer is OptimizerKind.SGD:
            return Sgd(learning_rate=config.learning_rate, momentum=config.momentum)
        return Adam(
            learning_rate=config.learning_rate,
            beta1=config.beta1,
            beta2=config.beta2,
            epsilon=config.epsilon,
        )
