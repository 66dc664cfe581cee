"""Tests for SGCNN graph operations against brute-force oracles."""

import math

import numpy as np
import pytest

from api.exceptions import ValidationError
from services.core.constants import PoolKind
from services.graph.property_graph import build_graph
from services.graph.sampling import sample_all
from services.numerics.activations import Activation
from services.numerics.matrix import ShapeMismatchError
from services.sgcnn.layers import AggregationLayer, ClassifierHead, ConvLayer
from services.sgcnn.operations import (
    aggregate,
    attribute_matrix,
    conv_layer_forward,
    cross_entropy,
    graph_readout,
    readout_and_classify,
)
from tests.helpers import make_graph, random_graph

SIX_NODE_EDGES = [
    ("A", "B"),
    ("A", "C"),
    ("B", "C"),
    ("B", "E"),
    ("C", "D"),
    ("D", "E"),
    ("E", "F"),
]


def loop_attribute_matrix(g):
    n, f = g.features.shape
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j or g.adjacency[i, j]:
                dot = 0.0
                for t in range(f):
                    dot += g.features[i, t] * g.features[j, t]
                out[i, j] = dot / math.sqrt(f)
    return out


def loop_pool(g, candidates, k):
    ranked = sorted(set(candidates), key=lambda i: (-int(g.adjacency[i].sum()), i))
    return ranked[:k]


def loop_convolve(R, selected, layer):
    values = []
    for c in range(layer.channels):
        total = layer.biases[c]
        for a, i in enumerate(selected):
            for b, j in enumerate(selected):
                total += layer.kernels[c, a, b] * R[i, j]
        values.append(total)
    return layer.phi.apply(np.array(values))


class TestAggregate:
    """Test neighborhood aggregation."""

    def test_isolated_nodes_get_activated_bias(self):
        """Test that empty hops leave sigma(b) in every appended column."""
        g = make_graph([[1.0, 2.0], [3.0, 4.0]])
        for pool in PoolKind:
            layer = AggregationLayer([0.3, 0.7], [0.2], Activation.of("tanh"), pool)
            out = aggregate(g, layer, sample_all(g, 2, 8))

            assert np.allclose(out.features[:, 2:], math.tanh(0.2), atol=1e-15)

    def test_star_center_averages_neighbors(self):
        """Test w=[1], identity, b=0 on a star with two leaves."""
        g = make_graph(np.eye(3), [(0, 1), (0, 2)])
        layer = AggregationLayer([1.0], [0.0], Activation.of("identity"), PoolKind.MEAN)
        out = aggregate(g, layer, sample_all(g, 1, 8))

        assert np.allclose(out.features[0, 3:], [0.0, 0.5, 0.5], atol=1e-15)

    def test_concatenates_original_features(self):
        """Test that output is [x ; x'] with the same topology."""
        g = random_graph(np.random.default_rng(0), 5, 3)
        layer = AggregationLayer([0.5, -0.5], [0.1], Activation(), PoolKind.MEAN)
        out = aggregate(g, layer, sample_all(g, 2, 8))

        assert out.feature_dim == 6
        assert np.array_equal(out.features[:, :3], g.features)
        assert np.array_equal(out.adjacency, g.adjacency)

    @pytest.mark.parametrize("pool", list(PoolKind))
    def test_node_e_aggregates_b_d_f(self, pool):
        """Test node E of the six-node example against hand-computed hop means."""
        generator = np.random.default_rng(5)
        features = {key: generator.normal(size=3) for key in "ABCDEF"}
        g = build_graph(
            [(key, "product", features[key]) for key in "ABCDEF"], SIX_NODE_EDGES
        )
        layer = AggregationLayer([0.8, -1.3], [0.05], Activation.of("identity"), pool)
        out = aggregate(g, layer, sample_all(g, 2, 8))

        hop1 = (features["B"] + features["D"] + features["F"]) / 3.0
        hop2 = (features["A"] + features["C"]) / 2.0
        weighted = np.stack([0.8 * hop1, -1.3 * hop2])
        pooled = weighted.mean(axis=0) if pool is PoolKind.MEAN else weighted.max(axis=0)
        assert np.allclose(out.features[g.index_of("E"), 3:], pooled + 0.05, atol=1e-12)

    def test_requires_one_sample_per_node(self):
        """Test that missing samples are rejected."""
        g = make_graph(np.eye(3), [(0, 1)])
        layer = AggregationLayer([1.0], [0.0])
        with pytest.raises(ValidationError):
            aggregate(g, layer, sample_all(g, 1, 8)[:2])

    def test_requires_deep_enough_samples(self):
        """Test that samples shallower than the layer are rejected."""
        g = make_graph(np.eye(3), [(0, 1)])
        layer = AggregationLayer([1.0, 1.0], [0.0])
        with pytest.raises(ValidationError):
            aggregate(g, layer, sample_all(g, 1, 8))


class TestAttributeMatrix:
    """Test the masked, scaled similarity matrix."""

    def test_singleton(self):
        """Test a single node with feature [1]."""
        g = make_graph([[1.0]])
        assert np.array_equal(attribute_matrix(g), [[1.0]])

    def test_disconnected_off_diagonal_is_zero(self):
        """Test that non-adjacent pairs are masked whatever their features."""
        g = make_graph([[1.0, 2.0], [3.0, 4.0]])
        R = attribute_matrix(g)

        assert R[0, 1] == 0.0 and R[1, 0] == 0.0
        assert R[0, 0] == pytest.approx(5.0 / math.sqrt(2))

    def test_matches_double_loop(self):
        """Test random 5-node graphs against explicit loops."""
        generator = np.random.default_rng(8)
        for _ in range(10):
            g = random_graph(generator, 5, 4)
            assert np.allclose(attribute_matrix(g), loop_attribute_matrix(g), atol=1e-12, rtol=0)

    def test_symmetric(self):
        """Test exact symmetry."""
        g = random_graph(np.random.default_rng(9), 7, 3)
        R = attribute_matrix(g)
        assert np.array_equal(R, R.T)


class TestConvLayerForward:
    """Test one coarsening layer."""

    def test_zero_parameters_give_zero_features(self):
        """Test that zero kernels and biases with relu output zeros."""
        g = random_graph(np.random.default_rng(1), 6, 3)
        layer = ConvLayer(np.zeros((4, 3, 3)), np.zeros(4), Activation.of("relu"))
        out = conv_layer_forward(g, layer)

        assert out.features.shape == (6, 4)
        assert not out.features.any()

    def test_singleton(self):
        """Test k=1, one channel, kernel [[1]], identity."""
        g = make_graph([[1.0, 2.0, 2.0]])
        layer = ConvLayer(np.ones((1, 1, 1)), np.zeros(1), Activation.of("identity"))
        out = conv_layer_forward(g, layer)

        assert out.features[0, 0] == pytest.approx(9.0 / math.sqrt(3))

    def test_matches_scalar_loops(self):
        """Test random 6-node graphs against a loop-only re-implementation."""
        generator = np.random.default_rng(10)
        for trial in range(10):
            g = random_graph(generator, 6, 3)
            layer = ConvLayer(
                generator.normal(size=(2, 3, 3)),
                generator.normal(size=2),
                Activation.of("tanh"),
            )
            out = conv_layer_forward(g, layer)
            R = loop_attribute_matrix(g)
            for v in range(6):
                neighbors = [u for u in range(6) if g.adjacency[v, u]]
                selected = loop_pool(g, [v] + neighbors, 3)
                expected = loop_convolve(R, selected, layer)
                assert np.allclose(out.features[v], expected, atol=1e-12, rtol=0), trial

    def test_keeps_adjacency(self):
        """Test that the coarse graph has the input's shape."""
        g = random_graph(np.random.default_rng(2), 5, 2)
        layer = ConvLayer(np.ones((3, 2, 2)), np.zeros(3))
        assert np.array_equal(conv_layer_forward(g, layer).adjacency, g.adjacency)


class TestReadoutAndClassify:
    """Test the graph-level readout and the head."""

    def test_readout_matches_loops(self):
        """Test the global pool readout against explicit loops."""
        generator = np.random.default_rng(12)
        g = random_graph(generator, 7, 3)
        layer = ConvLayer(generator.normal(size=(4, 3, 3)), generator.normal(size=4))
        selected = loop_pool(g, range(7), 3)
        expected = loop_convolve(loop_attribute_matrix(g), selected, layer)

        assert np.allclose(graph_readout(g, layer), expected, atol=1e-12, rtol=0)

    def test_zero_head_gives_uniform(self):
        """Test that a zero head predicts uniformly."""
        g = random_graph(np.random.default_rng(3), 4, 2)
        layer = ConvLayer(np.ones((2, 2, 2)), np.zeros(2))
        head = ClassifierHead(np.zeros((2, 4)), np.zeros(4))
        assert np.allclose(readout_and_classify(g, layer, head), 0.25, atol=1e-15)

    def test_identical_columns_give_uniform(self):
        """Test that equal logits for every class predict uniformly."""
        g = random_graph(np.random.default_rng(4), 4, 2)
        layer = ConvLayer(np.ones((2, 2, 2)), np.zeros(2), Activation.of("tanh"))
        head = ClassifierHead(np.tile([[0.3], [-1.2]], (1, 3)), np.zeros(3))
        assert np.allclose(readout_and_classify(g, layer, head), 1.0 / 3.0, atol=1e-12)

    def test_probabilities_sum_to_one(self):
        """Test many random layers, heads and graphs."""
        generator = np.random.default_rng(13)
        for _ in range(100):
            g = random_graph(generator, int(generator.integers(1, 9)), 3)
            layer = ConvLayer(
                generator.normal(size=(3, 2, 2)), generator.normal(size=3), Activation()
            )
            head = ClassifierHead(generator.normal(size=(3, 6)), generator.normal(size=6))
            assert readout_and_classify(g, layer, head).sum() == pytest.approx(1.0, abs=1e-12)

    def test_head_shape_mismatch(self):
        """Test that the head must accept the readout width."""
        g = make_graph([[1.0]])
        layer = ConvLayer(np.ones((2, 1, 1)), np.zeros(2))
        head = ClassifierHead(np.zeros((3, 2)), np.zeros(2))
        with pytest.raises(ShapeMismatchError):
            readout_and_classify(g, layer, head)


class TestCrossEntropy:
    """Test the clamped cross-entropy loss."""

    def test_perfect_prediction(self):
        """Test zero loss when the prediction equals the target."""
        y = np.array([0.0, 1.0, 0.0])
        assert cross_entropy(y, y) == pytest.approx(0.0, abs=1e-9)

    def test_uniform_six_classes(self):
        """Test ln 6 for a uniform prediction."""
        y = np.eye(6)[2]
        assert cross_entropy(y, np.full(6, 1 / 6)) == pytest.approx(math.log(6), abs=1e-12)

    def test_half_mass_on_true_class(self):
        """Test ln 2 when half the mass is on the true class."""
        y = np.eye(6)[0]
        y_hat = np.array([0.5, 0.5, 0.0, 0.0, 0.0, 0.0])
        assert cross_entropy(y, y_hat) == pytest.approx(math.log(2), abs=1e-12)

    def test_zero_probability_is_clamped(self):
        """Test that log(0) is replaced by log(1e-12)."""
        assert cross_entropy(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == pytest.approx(
            -math.log(1e-12)
        )

    def test_shape_mismatch(self):
        """Test that y and y_hat must have the same shape."""
        with pytest.raises(ShapeMismatchError):
            cross_entropy(np.ones(2), np.ones(3) / 3)
