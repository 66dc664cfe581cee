"""Tests for classification metrics and evaluation."""

import math

import numpy as np
import pytest

from api.exceptions import ValidationError
from services.sgcnn.network import UnknownLabelError
from services.training.metrics import (
    Metrics,
    compute_metrics,
    evaluate,
    format_metrics_table,
)
from tests.helpers import random_graph, small_model

LABELS = ("a", "b", "c")


def sample_metrics():
    return compute_metrics(LABELS, [0, 0, 1, 1, 1, 2], [0, 1, 1, 1, 0, 2], [0.5] * 6)


class TestComputeMetrics:
    """Test confusion, accuracy and recall."""

    def test_confusion_rows_are_true_labels(self):
        """Test confusion[i][j] counts label i predicted as j."""
        assert sample_metrics().confusion == ((1, 1, 0), (1, 2, 0), (0, 0, 1))

    def test_accuracy_is_trace_over_total(self):
        """Test the accuracy definition exactly."""
        metrics = sample_metrics()
        trace = sum(metrics.confusion[i][i] for i in range(3))

        assert metrics.accuracy == trace / metrics.total
        assert metrics.total == 6

    def test_per_class_recall(self):
        """Test recall per class."""
        assert sample_metrics().per_class_recall == pytest.approx((0.5, 2 / 3, 1.0))

    def test_absent_class_has_zero_recall(self):
        """Test that a class with no samples reports recall 0."""
        metrics = compute_metrics(LABELS, [0, 0], [0, 2], [1.0, 3.0])

        assert metrics.per_class_recall[1] == 0.0
        assert metrics.confusion[1] == (0, 0, 0)
        assert metrics.loss == 2.0

    def test_empty(self):
        """Test that metrics over nothing are rejected."""
        with pytest.raises(ValidationError):
            compute_metrics(LABELS, [], [], [])

    def test_dict_round_trip(self):
        """Test to_dict and from_dict."""
        metrics = sample_metrics()
        assert Metrics.from_dict(metrics.to_dict()) == metrics


class TestFormatMetricsTable:
    """Test the fixed-column table."""

    def test_layout(self):
        """Test header, one row per label, the overall line and the loss line."""
        lines = format_metrics_table(sample_metrics()).splitlines()

        assert lines[0].split() == ["label", "support", "correct", "recall"]
        assert lines[1].split() == ["a", "2", "1", "0.5000"]
        assert lines[4].split() == ["overall", "6", "4", "0.6667"]
        assert lines[5].split() == ["loss", "0.500000"]
        assert len({len(line) for line in lines[:5]}) == 1


class TestEvaluate:
    """Test the forward-only evaluation pass."""

    def test_chance_level_model(self):
        """Test that a zero head predicts uniformly and scores 1/3 on a balanced set."""
        model = small_model()
        model.head.weight[:] = 0.0
        model.head.bias[:] = 0.0
        generator = np.random.default_rng(0)
        samples = [
            random_graph(generator, 5, 3, label=label, graph_id=f"{label}{i}")
            for label in LABELS
            for i in range(4)
        ]
        metrics = evaluate(model, samples)

        assert metrics.accuracy == pytest.approx(1 / 3)
        assert metrics.loss == pytest.approx(math.log(3), abs=1e-12)

    def test_confusion_rows_match_class_counts(self):
        """Test that row sums are the per-class sample counts."""
        generator = np.random.default_rng(1)
        samples = [random_graph(generator, 4, 3, label="a") for _ in range(3)]
        samples += [random_graph(generator, 4, 3, label="c") for _ in range(2)]
        metrics = evaluate(small_model(), samples)

        assert [sum(row) for row in metrics.confusion] == [3, 0, 2]
        assert 0.0 <= metrics.accuracy <= 1.0

    def test_precomputed_plans(self):
        """Test that passing plans gives identical metrics."""
        model = small_model()
        generator = np.random.default_rng(2)
        samples = [random_graph(generator, 5, 3, label="b") for _ in range(3)]
        plans = [model.plan(g) for g in samples]

        assert evaluate(model, samples, plans) == evaluate(model, samples)

    def test_unknown_label(self):
        """Test that labels outside the model are rejected."""
        g = random_graph(np.random.default_rng(3), 3, 3, label="zebra")
        with pytest.raises(UnknownLabelError):
            evaluate(small_model(), [g])

    def test_empty(self):
        """Test that an empty set is rejected."""
        with pytest.raises(ValidationError):
            evaluate(small_model(), [])
