"""Tests for ranked k-node pooling."""

import numpy as np
import pytest

from api.exceptions import ValidationError
from services.graph.pooling import (
    PoolSelection,
    closed_neighborhood_selections,
    global_selection,
    induced_adjacency,
    pool_select,
    stack_selections,
)
from tests.helpers import make_graph, random_graph


def star(leaves=4):
    return make_graph(np.zeros((leaves + 1, 1)), [(0, i) for i in range(1, leaves + 1)])


class TestPoolSelect:
    """Test ranking, truncation and padding."""

    def test_padding(self):
        """Test two candidates pooled to four."""
        sel = pool_select(star(), [1, 2], 4)

        assert sel.indices == (1, 2)
        assert sel.pad == 2
        assert sel.size == 4

    def test_hub_wins(self):
        """Test that the highest-degree node is kept first."""
        assert pool_select(star(), range(5), 1).indices == (0,)

    def test_ties_break_by_key(self):
        """Test that equal degrees keep the smallest keys."""
        assert pool_select(star(), [4, 3, 2, 1], 2).indices == (1, 2)

    def test_duplicates_are_ignored(self):
        """Test that repeated candidates count once."""
        sel = pool_select(star(), [1, 1, 1], 2)
        assert sel.indices == (1,)
        assert sel.pad == 1

    def test_invalid_arguments(self):
        """Test k and index range checks."""
        with pytest.raises(ValidationError):
            pool_select(star(), [0], 0)
        with pytest.raises(ValidationError):
            pool_select(star(), [9], 1)

    def test_closed_neighborhoods(self):
        """Test that every node pools itself and its neighbors."""
        selections = closed_neighborhood_selections(star(2), 3)

        assert selections[0].indices == (0, 1, 2)
        assert selections[1].indices == (0, 1)
        assert selections[1].pad == 1

    def test_global_selection(self):
        """Test the readout pool over all nodes."""
        assert global_selection(star(3), 2).indices == (0, 1)


class TestInducedAdjacency:
    """Test the pooled adjacency submatrix."""

    def test_pad_only(self):
        """Test that an empty selection gives zeros."""
        out = induced_adjacency(star(), PoolSelection(indices=(), pad=3))
        assert np.array_equal(out, np.zeros((3, 3)))

    def test_triangle(self):
        """Test a complete graph on three nodes."""
        g = make_graph(np.zeros((3, 1)), [(0, 1), (1, 2), (0, 2)])
        out = induced_adjacency(g, pool_select(g, range(3), 3))
        assert np.array_equal(out, np.ones((3, 3)) - np.eye(3))

    def test_matches_index_lookup(self):
        """Test random graphs against a double loop in selection order."""
        generator = np.random.default_rng(21)
        for _ in range(10):
            g = random_graph(generator, 7, 1)
            sel = pool_select(g, range(7), 5)
            out = induced_adjacency(g, sel)
            for a in range(5):
                for b in range(5):
                    expected = g.adjacency[sel.indices[a], sel.indices[b]]
                    assert out[a, b] == expected


class TestStackSelections:
    """Test packing selections into gather arrays."""

    def test_indices_and_mask(self):
        """Test that padded slots point at node 0 with mask 0."""
        selections = [PoolSelection((3, 1), 1), PoolSelection((2, 0, 4), 0)]
        indices, mask = stack_selections(selections, 3)

        assert indices.dtype == np.int64
        assert indices.tolist() == [[3, 1, 0], [2, 0, 4]]
        assert mask.tolist() == [[1.0, 1.0, 0.0], [1.0, 1.0, 1.0]]
