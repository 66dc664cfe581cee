"""Tests for core.factories module."""

import numpy as np

from data.models.configs import TrainConfig
from services.core.factories import EmbedderFactory, ModelFactory, OptimizerFactory
from services.core.interfaces import IOptimizer, ITextEmbedder
from services.numerics.rng import Rng
from services.training.optimizers import Adam, Sgd
from tests.helpers import small_config


class TestEmbedderFactory:
    """Test EmbedderFactory methods."""

    def test_shared_per_dimension(self):
        """Test that one embedder is cached per dimension."""
        first = EmbedderFactory.create_embedder(8)

        assert isinstance(first, ITextEmbedder)
        assert first.dim == 8
        assert EmbedderFactory.create_embedder(8) is first
        assert EmbedderFactory.create_embedder(9) is not first


class TestModelFactory:
    """Test ModelFactory methods."""

    def test_seeded(self):
        """Test that one seed gives identical parameters."""
        first = ModelFactory.create_model(small_config(), Rng(5))
        second = ModelFactory.create_model(small_config(), Rng(5))

        for name, array in first.parameters().items():
            assert np.array_equal(array, second.parameters()[name])
        assert first.labels == ("a", "b", "c")


class TestOptimizerFactory:
    """Test OptimizerFactory methods."""

    def test_sgd(self):
        """Test that sgd carries lr and momentum."""
        optimizer = OptimizerFactory.create_optimizer(
            TrainConfig(optimizer="sgd", learning_rate=0.5, momentum=0.25)
        )

        assert isinstance(optimizer, Sgd)
        assert optimizer.state_dict()["momentum"] == 0.25

    def test_adam_is_default(self):
        """Test that the default config creates Adam."""
        optimizer = OptimizerFactory.create_optimizer(TrainConfig())

        assert isinstance(optimizer, IOptimizer)
        assert isinstance(optimizer, Adam)
        assert optimizer.state_dict()["learning_rate"] == 1e-3
