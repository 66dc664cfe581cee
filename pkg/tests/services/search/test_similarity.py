"""Tests for cosine similarity search."""

import numpy as np
import pytest

from api.exceptions import ContentNotFoundError, ValidationError
from services.search.similarity import cosine_similarities, similarity_search
from tests.helpers import random_graph, small_model


def catalogue():
    generator = np.random.default_rng(12)
    graphs = [random_graph(generator, 5, 3, graph_id=f"p{i}") for i in range(6)]
    graphs.append(graphs[2].with_label(None, graph_id="copy-of-p2"))
    return graphs


class TestCosineSimilarities:
    """Test the row-wise cosine."""

    def test_values(self):
        """Test parallel, orthogonal and opposite rows."""
        vectors = np.array([[2.0, 0.0], [0.0, 3.0], [-1.0, 0.0]])
        assert cosine_similarities(np.array([1.0, 0.0]), vectors).tolist() == [1.0, 0.0, -1.0]

    def test_zero_norm_scores_zero(self):
        """Test that zero vectors score 0 instead of NaN."""
        scores = cosine_similarities(np.zeros(2), np.array([[1.0, 1.0], [0.0, 0.0]]))
        assert scores.tolist() == [0.0, 0.0]


class TestSimilaritySearch:
    """Test ranking, ties and argument checks."""

    def test_duplicate_ranks_first(self):
        """Test that an identical graph is the nearest neighbour."""
        result = similarity_search(small_model(channels=(3, 6)), catalogue(), "p2", top_n=3)

        assert result.anchor_id == "p2"
        assert result.results[0].product_id == "copy-of-p2"
        assert result.results[0].similarity == pytest.approx(1.0)
        assert len(result.results) == 3

    def test_anchor_excluded_and_sorted(self):
        """Test that the anchor is absent and scores never increase."""
        result = similarity_search(small_model(channels=(3, 6)), catalogue(), "p0", top_n=10)
        scores = [n.similarity for n in result.results]

        assert "p0" not in [n.product_id for n in result.results]
        assert len(scores) == 6
        assert scores == sorted(scores, reverse=True)

    def test_ties_broken_by_id(self):
        """Test that equal scores are ordered by product id."""
        base = random_graph(np.random.default_rng(4), 4, 3, graph_id="anchor")
        graphs = [base] + [base.with_label(None, graph_id=name) for name in ("zz", "aa", "mm")]
        result = similarity_search(small_model(channels=(3, 6)), graphs, "anchor")

        assert [n.product_id for n in result.results] == ["aa", "mm", "zz"]

    def test_predicted_labels(self):
        """Test that every neighbour carries a model label."""
        model = small_model(channels=(3, 6))
        result = similarity_search(model, catalogue(), "p1")
        assert all(n.predicted_label in model.labels for n in result.results)

    def test_to_dict(self):
        """Test the serialized field names."""
        model = small_model(channels=(3, 6))
        data = similarity_search(model, catalogue(), "p1", top_n=1).to_dict()
        assert data["anchor"] == "p1"
        assert set(data["results"][0]) == {"id", "similarity", "predicted"}

    def test_unknown_anchor(self):
        """Test that an unknown id is reported as not found."""
        with pytest.raises(ContentNotFoundError):
            similarity_search(small_model(channels=(3, 6)), catalogue(), "missing")

    def test_top_n_must_be_positive(self):
        """Test that top_n below 1 is rejected."""
        with pytest.raises(ValidationError):
            similarity_search(small_model(channels=(3, 6)), catalogue(), "p1", top_n=0)
