"""Forward and backward passes of the SGCNN.

The forward pass is aggregation, then ``L - 1`` node-level coarsening layers
(attribute matrix, pooled convolution), then the last layer applied once to the
globally pooled attribute matrix, then the linear head and softmax. The backward
pass is the exact gradient of the cross-entropy with respect to every parameter,
holding the pooled node selections fixed.
"""

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from api.exceptions import ValidationError
from services.core.constants import PoolKind
from services.graph.property_graph import Graph
from services.numerics.matrix import Matrix, ShapeMismatchError, Vector
from services.sgcnn.model import Gradients, SgcnnModel
from services.sgcnn.operations import (
    _aggregate,
    _attribute_matrix,
    _classify,
    _convolve,
    _gather_pooled,
    _readout,
    cross_entropy,
)
from services.sgcnn.plan import GraphPlan


class StaleCacheError(ValidationError):
    """A forward cache was produced by different parameters than the model now holds."""

    def __init__(self, cache_version: int, model_version: int):
        super().__init__(
            f"Forward cache is stale (computed at parameter version {cache_version}, "
            f"model is at {model_version}); run forward again",
            details={"cache_version": cache_version, "model_version": model_version},
        )


class UnknownLabelError(ValidationError):
    def __init__(self, labels: Sequence[str], known: Sequence[str]):
        super().__init__(
            f"Labels {sorted(set(labels))} are not in the model's label set {list(known)}",
            details={"unknown": sorted(set(labels))},
        )
        self.labels = sorted(set(labels))


@dataclass(frozen=True)
class _Stage:
    inputs: Matrix
    pooled: np.ndarray
    pre: Matrix


@dataclass(frozen=True)
class ForwardCache:
    """Everything backward needs, tagged with the parameter version it came from."""

    model_id: int
    model_version: int
    plan: GraphPlan
    features: Matrix
    aggregation: dict
    stages: Tuple[_Stage, ...]
    readout_inputs: Matrix
    readout_pooled: Matrix
    readout_pre: Vector
    readout: Vector
    probabilities: Vector


class Prediction(NamedTuple):
    label: str
    probabilities: Vector


def one_hot(label: Optional[str], labels: Sequence[str]) -> Vector:
    if label not in labels:
        raise UnknownLabelError([str(label)], labels)
    y = np.zeros(len(labels), dtype=np.float64)
    y[list(labels).index(label)] = 1.0
    return y


def forward(
    model: SgcnnModel, g: Graph, plan: Optional[GraphPlan] = None
) -> Tuple[Vector, ForwardCache]:
    """Class probabilities of ``g`` and the cache for :func:`backward`."""
    if g.feature_dim != model.config.embed_dim:
        raise ShapeMismatchError(
            "forward", (g.num_nodes, model.config.embed_dim), g.features.shape
        )
    plan = plan if plan is not None else model.plan(g)

    x, aggregation = _aggregate(g.features, plan.hop_operators, model.aggregation)
    stages: List[_Stage] = []
    for layer in model.conv_layers[:-1]:
        pooled = _gather_pooled(
            _attribute_matrix(x, plan.closed_mask), plan.node_indices, plan.node_mask
        )
        pre, out = _convolve(pooled, layer)
        stages.append(_Stage(inputs=x, pooled=pooled, pre=pre))
        x = out

    readout_pooled, readout_pre, readout = _readout(
        _attribute_matrix(x, plan.closed_mask),
        plan.global_indices,
        plan.global_mask,
        model.conv_layers[-1],
    )
    probabilities = _classify(readout, model.head)
    cache = ForwardCache(
        model_id=id(model),
        model_version=model.version,
        plan=plan,
        features=g.features,
        aggregation=aggregation,
        stages=tuple(stages),
        readout_inputs=x,
        readout_pooled=readout_pooled,
        readout_pre=readout_pre,
        readout=readout,
        probabilities=probabilities,
    )
    return probabilities, cache


def _attribute_backward(d_attr: Matrix, features: Matrix, closed_mask: Matrix) -> Matrix:
    scale = math.sqrt(features.shape[1])
    return ((d_attr + d_attr.T) * closed_mask) @ features / scale


def _scatter(d_pooled: np.ndarray, rows, cols, num_nodes: int) -> Matrix:
    d_attr = np.zeros((num_nodes, num_nodes), dtype=np.float64)
    np.add.at(d_attr, (rows, cols), d_pooled)
    return d_attr


def backward(model: SgcnnModel, cache: ForwardCache, y: Vector) -> Gradients:
    """Gradient of ``cross_entropy(y, probabilities)`` for every parameter."""
    if cache.model_id != id(model) or cache.model_version != model.version:
        raise StaleCacheError(cache.model_version, model.version)
    y = np.asarray(y, dtype=np.float64)
    if y.shape != cache.probabilities.shape:
        raise ShapeMismatchError("backward", cache.probabilities.shape, y.shape)

    plan = cache.plan
    n = plan.num_nodes
    grads = {}

    d_logits = cache.probabilities - y
    grads["head.weight"] = np.outer(cache.readout, d_logits)
    grads["head.bias"] = d_logits
    d_readout = model.head.weight @ d_logits

    last_index = len(model.conv_layers) - 1
    last = model.conv_layers[last_index]
    d_pre = d_readout * last.phi.derivative(cache.readout_pre)
    grads[f"conv.{last_index}.kernels"] = d_pre[:, None, None] * cache.readout_pooled[None]
    grads[f"conv.{last_index}.biases"] = d_pre
    d_pooled = np.einsum("c,cij->ij", d_pre, last.kernels) * plan.global_pair_mask
    d_attr = _scatter(
        d_pooled, plan.global_indices[:, None], plan.global_indices[None, :], n
    )
    d_x = _attribute_backward(d_attr, cache.readout_inputs, plan.closed_mask)

    pair_mask = plan.node_pair_mask
    rows = plan.node_indices[:, :, None]
    cols = plan.node_indices[:, None, :]
    for index in reversed(range(len(cache.stages))):
        stage = cache.stages[index]
        layer = model.conv_layers[index]
        d_pre = d_x * layer.phi.derivative(stage.pre)
        grads[f"conv.{index}.kernels"] = np.einsum("vc,vij->cij", d_pre, stage.pooled)
        grads[f"conv.{index}.biases"] = d_pre.sum(axis=0)
        d_pooled = np.einsum("vc,cij->vij", d_pre, layer.kernels) * pair_mask
        d_x = _attribute_backward(
            _scatter(d_pooled, rows, cols, n), stage.inputs, plan.closed_mask
        )

    aggregation = model.aggregation
    embed_dim = cache.features.shape[1]
    d_pre = d_x[:, embed_dim:] * aggregation.sigma.derivative(cache.aggregation["pre"])
    hop_means = cache.aggregation["hop_means"]
    if aggregation.pool is PoolKind.MAX:
        chosen = cache.aggregation["argmax"][None] == np.arange(aggregation.depth)[:, None, None]
        d_weights = np.einsum("nf,jnf->j", d_pre, hop_means * chosen)
    else:
        d_weights = np.einsum("nf,jnf->j", d_pre, hop_means) / aggregation.depth
    grads["aggregation.weights"] = d_weights
    grads["aggregation.bias"] = np.array([d_pre.sum()])

    names = model.parameters()
    return Gradients({name: grads[name] for name in names})


def loss_and_gradients(
    model: SgcnnModel, g: Graph, plan: Optional[GraphPlan] = None
) -> Tuple[float, Vector, Gradients]:
    """Forward and backward for one labeled graph."""
    y = one_hot(g.label, model.labels)
    probabilities, cache = forward(model, g, plan)
    return cross_entropy(y, probabilities), probabilities, backward(model, cache, y)


def graph_embedding(
    model: SgcnnModel, g: Graph, plan: Optional[GraphPlan] = None
) -> Vector:
    """The readout vector the classifier head sees."""
    _, cache = forward(model, g, plan)
    return cache.readout


def predict(model: SgcnnModel, g: Graph, plan: Optional[GraphPlan] = None) -> Prediction:
    probabilities, _ = forward(model, g, plan)
    return Prediction(model.labels[int(np.argmax(probabilities))], probabilities)
