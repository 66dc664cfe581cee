"""Graph operations of the SGCNN.

Each operation comes in two forms: a Graph-level function that matches how the
operation is described (and is what tests and callers outside the model use),
and an array kernel prefixed ``_`` that the forward pass calls with arrays from
a :class:`GraphPlan`. The Graph-level functions are thin wrappers, so both forms
compute identical values.
"""

import math
from typing import List, Optional, Tuple

import numpy as np

from api.exceptions import ValidationError
from services.core.constants import LOG_CLAMP, PoolKind
from services.graph.pooling import (
    closed_neighborhood_selections,
    global_selection,
    stack_selections,
)
from services.graph.property_graph import Graph
from services.graph.sampling import NeighborhoodSample
from services.numerics.matrix import Matrix, ShapeMismatchError, Vector, softmax
from services.sgcnn.layers import AggregationLayer, ClassifierHead, ConvLayer
from services.sgcnn.plan import IndexArray, hop_mean_operators


def _aggregate(
    features: Matrix, hop_operators: np.ndarray, layer: AggregationLayer
) -> Tuple[Matrix, dict]:
    """Return ``[X ; X']`` and the intermediates backward needs."""
    hop_means = hop_operators @ features
    weighted = layer.weights[:, None, None] * hop_means
    argmax: Optional[np.ndarray] = None
    if layer.pool is PoolKind.MAX:
        argmax = np.argmax(weighted, axis=0)
        pooled = np.take_along_axis(weighted, argmax[None], axis=0)[0]
    else:
        pooled = weighted.mean(axis=0)
    pre_activation = pooled + layer.bias[0]
    aggregated = layer.sigma.apply(pre_activation)
    out = np.concatenate([features, aggregated], axis=1)
    return out, {"hop_means": hop_means, "argmax": argmax, "pre": pre_activation}


def aggregate(
    g: Graph, layer: AggregationLayer, samples: List[NeighborhoodSample]
) -> Graph:
    """Neighborhood aggregation: append ``sigma(pool_j(w_j * m_j) + b)`` to every node.

    ``m_j`` is the mean feature of the sampled hop-``j`` neighbors (zero when
    the hop is empty). The output graph has feature dimension ``2f`` and the
    same adjacency.
    """
    centers = sorted(sample.center for sample in samples)
    if centers != list(range(g.num_nodes)):
        raise ValidationError(
            f"Expected one neighborhood sample per node ({g.num_nodes}), got {len(samples)}"
        )
    for sample in samples:
        if sample.depth < layer.depth:
            raise ValidationError(
                f"Sample of node {sample.center} has depth {sample.depth}, "
                f"layer needs {layer.depth}"
            )
    operators = hop_mean_operators(samples, g.num_nodes, layer.depth)
    out, _ = _aggregate(g.features, operators, layer)
    return g.with_features(out)


def _attribute_matrix(features: Matrix, closed_mask: Matrix) -> Matrix:
    scale = math.sqrt(features.shape[1])
    return closed_mask * (features @ features.T) / scale


def attribute_matrix(g: Graph) -> Matrix:
    """Adjacency-masked scaled similarity: ``R_ij = (A + I)_ij * x_i . x_j / sqrt(f')``."""
    if g.num_nodes == 0:
        raise ValidationError("Attribute matrix of an empty graph is undefined")
    return _attribute_matrix(g.features, g.adjacency + np.eye(g.num_nodes))


def _gather_pooled(R: Matrix, indices: IndexArray, mask: Matrix) -> np.ndarray:
    """``R`` restricted to each row of ``indices``, zeroed at padded slots.

    ``indices`` and ``mask`` may be ``(k,)`` or ``(n, k)``; the result is
    ``(k, k)`` or ``(n, k, k)`` accordingly.
    """
    rows = indices[..., :, None]
    cols = indices[..., None, :]
    return R[rows, cols] * mask[..., :, None] * mask[..., None, :]


def _convolve(pooled: np.ndarray, layer: ConvLayer) -> Tuple[Matrix, Matrix]:
    """Per-channel Frobenius product plus bias; returns ``(pre, activated)``."""
    pre = np.einsum("...ij,cij->...c", pooled, layer.kernels) + layer.biases
    return pre, layer.phi.apply(pre)


def conv_layer_forward(g: Graph, layer: ConvLayer) -> Graph:
    """One coarsening layer.

    Every node pools its closed neighborhood to ``layer.k`` nodes, restricts the
    attribute matrix to them and takes one Frobenius product per channel. The
    coarse graph keeps the adjacency; node ``v`` gets a ``C``-vector.
    """
    R = attribute_matrix(g)
    indices, mask = stack_selections(closed_neighborhood_selections(g, layer.k), layer.k)
    _, out = _convolve(_gather_pooled(R, indices, mask), layer)
    return g.with_features(out)


def _readout(R: Matrix, indices: IndexArray, mask: Matrix, layer: ConvLayer):
    pooled = _gather_pooled(R, indices, mask)
    pre, readout = _convolve(pooled, layer)
    return pooled, pre, readout


def _classify(readout: Vector, head: ClassifierHead) -> Vector:
    return softmax(readout @ head.weight + head.bias)


def graph_readout(g: Graph, last: ConvLayer) -> Vector:
    """Graph-level vector: the final layer's kernels applied to the global pool."""
    selection = global_selection(g, last.k)
    indices, mask = stack_selections([selection], last.k)
    _, _, readout = _readout(attribute_matrix(g), indices[0], mask[0], last)
    return readout


def readout_and_classify(g: Graph, last: ConvLayer, head: ClassifierHead) -> Vector:
    """Class probabilities of ``g`` from the global readout and the linear head."""
    readout = graph_readout(g, last)
    if readout.shape[0] != head.weight.shape[0]:
        raise ShapeMismatchError("classifier head", readout.shape, head.weight.shape)
    return _classify(readout, head)


def cross_entropy(y: Vector, y_hat: Vector) -> float:
    """``-sum_i y_i log(y_hat_i)`` with ``y_hat`` clamped away from zero."""
    y = np.asarray(y, dtype=np.float64)
    y_hat = np.asarray(y_hat, dtype=np.float64)
    if y.shape != y_hat.shape:
        raise ShapeMismatchError("cross_entropy", y.shape, y_hat.shape)
    return float(-np.sum(y * np.log(np.maximum(y_hat, LOG_CLAMP))))
