"""SGCNN model container and its gradient counterpart."""

import logging
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from api.exceptions import ValidationError
from data.models.configs import SgcnnConfig
from services.core.interfaces import IOptimizer
from services.graph.property_graph import Graph
from services.numerics.activations import Activation
from services.numerics.matrix import ShapeMismatchError
from services.numerics.rng import Rng
from services.sgcnn.layers import AggregationLayer, ClassifierHead, ConvLayer
from services.sgcnn.plan import GraphPlan

logger = logging.getLogger(__name__)


class SgcnnModel:
    """Aggregation layer, a stack of convolution layers and a classifier head.

    Layers ``0 .. L-2`` coarsen node by node; layer ``L-1`` is the graph-level
    readout. ``version`` increases whenever the parameters change, which lets
    :func:`services.sgcnn.network.backward` reject caches from older weights.
    """

    def __init__(
        self,
        config: SgcnnConfig,
        aggregation: AggregationLayer,
        conv_layers: List[ConvLayer],
        head: ClassifierHead,
    ):
        if aggregation.depth != config.search_depth:
            raise ValidationError(
                f"Aggregation depth {aggregation.depth} != search_depth {config.search_depth}"
            )
        if [layer.channels for layer in conv_layers] != list(config.channels):
            raise ValidationError(
                f"Layer channels {[layer.channels for layer in conv_layers]} "
                f"!= configured {list(config.channels)}"
            )
        if head.num_classes != len(config.labels):
            raise ValidationError(
                f"Head has {head.num_classes} classes, config lists {len(config.labels)} labels"
            )
        if head.weight.shape[0] != conv_layers[-1].channels:
            raise ShapeMismatchError(
                "classifier head", (conv_layers[-1].channels,), head.weight.shape
            )
        self.config = config
        self.aggregation = aggregation
        self.conv_layers = conv_layers
        self.head = head
        self.version = 0

    @classmethod
    def initialize(cls, config: SgcnnConfig, rng: Rng) -> "SgcnnModel":
        """Uniform ``+-1/sqrt(fan_in)`` initialization from ``rng``."""
        phi = Activation.of(config.phi)
        conv_layers = [
            ConvLayer.initialize(config.kernel_size, channels, phi, rng.child(f"conv.{i}"))
            for i, channels in enumerate(config.channels)
        ]
        model = cls(
            config,
            AggregationLayer.initialize(
                config.search_depth,
                Activation.of(config.sigma),
                config.aggregation_pool,
                rng.child("aggregation"),
            ),
            conv_layers,
            ClassifierHead.initialize(
                config.channels[-1], len(config.labels), rng.child("head")
            ),
        )
        logger.debug(
            f"Initialized SGCNN with {model.num_parameters} parameters "
            f"({config.num_layers} layers)"
        )
        return model

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.config.labels

    @property
    def num_parameters(self) -> int:
        return sum(array.size for array in self.parameters().values())

    def parameters(self) -> Dict[str, np.ndarray]:
        """Named parameter arrays, shared with the layers (not copies)."""
        named = {
            f"aggregation.{name}": array
            for name, array in self.aggregation.parameters().items()
        }
        for i, layer in enumerate(self.conv_layers):
            named.update(
                {f"conv.{i}.{name}": array for name, array in layer.parameters().items()}
            )
        named.update(
            {f"head.{name}": array for name, array in self.head.parameters().items()}
        )
        return named

    def snapshot(self) -> Dict[str, np.ndarray]:
        return {name: array.copy() for name, array in self.parameters().items()}

    def load_parameters(self, values: Mapping[str, np.ndarray]) -> None:
        """Copy ``values`` into the model; names and shapes must match exactly."""
        current = self.parameters()
        missing = sorted(set(current) - set(values))
        unexpected = sorted(set(values) - set(current))
        if missing or unexpected:
            raise ValidationError(
                f"Parameter names do not match the model (missing {missing}, "
                f"unexpected {unexpected})"
            )
        for name, array in current.items():
            value = np.asarray(values[name], dtype=np.float64)
            if value.shape != array.shape:
                raise ShapeMismatchError(f"load {name}", array.shape, value.shape)
        for name, array in current.items():
            np.copyto(array, values[name])
        self.version += 1

    def apply_gradients(self, optimizer: IOptimizer, gradients: "Gradients") -> None:
        optimizer.step(self.parameters(), gradients.arrays)
        self.version += 1

    def plan(self, g: Graph, rng: Optional[Rng] = None) -> GraphPlan:
        return GraphPlan.build(
            g,
            depth=self.config.search_depth,
            hop_cap=self.config.hop_cap,
            k=self.config.kernel_size,
            rng=rng,
        )


class Gradients:
    """One gradient array per model parameter, with matching names and shapes."""

    def __init__(self, arrays: Dict[str, np.ndarray]):
        self.arrays = arrays

    @classmethod
    def zeros_like(cls, model: SgcnnModel) -> "Gradients":
        return cls({name: np.zeros_like(a) for name, a in model.parameters().items()})

    def __getitem__(self, name: str) -> np.ndarray:
        return self.arrays[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self.arrays)

    def items(self):
        return self.arrays.items()

    def add(self, other: "Gradients") -> "Gradients":
        """Accumulate ``other`` into this object in place."""
        if set(other.arrays) != set(self.arrays):
            raise ValidationError("Cannot add gradients of different models")
        for name, array in self.arrays.items():
            if other.arrays[name].shape != array.shape:
                raise ShapeMismatchError(f"add {name}", array.shape, other.arrays[name].shape)
            array += other.arrays[name]
        return self

    def scale(self, factor: float) -> "Gradients":
        for array in self.arrays.values():
            array *= factor
        return self

    def is_finite(self) -> bool:
        return all(bool(np.all(np.isfinite(a))) for a in self.arrays.values())
