"""Tests for the seeded, splittable random stream."""

import numpy as np

from services.numerics.rng import Rng


class TestRng:
    """Test determinism and stream independence."""

    def test_same_seed_same_stream(self):
        """Test that two generators with one seed draw identical values."""
        assert np.array_equal(Rng(42).uniform(0, 1, 10), Rng(42).uniform(0, 1, 10))

    def test_different_seeds_differ(self):
        """Test that different seeds give different draws."""
        assert not np.array_equal(Rng(1).uniform(0, 1, 10), Rng(2).uniform(0, 1, 10))

    def test_child_streams_are_named(self):
        """Test that children with different names differ and equal names agree."""
        root = Rng(3)
        a = root.child("a").normal(5)
        assert np.array_equal(a, Rng(3).child("a").normal(5))
        assert not np.array_equal(a, root.child("b").normal(5))

    def test_child_ignores_parent_consumption(self):
        """Test that draws on the parent do not shift a child's stream."""
        used = Rng(9)
        used.uniform(0, 1, 100)
        assert np.array_equal(used.child("x").normal(4), Rng(9).child("x").normal(4))

    def test_nested_children_differ_from_siblings(self):
        """Test that path depth matters."""
        root = Rng(0)
        assert not np.array_equal(
            root.child("a").child("b").normal(3), root.child("b").normal(3)
        )

    def test_seed_is_reduced_to_64_bits(self):
        """Test that seeds wrap modulo 2**64."""
        assert Rng(2**64 + 3).seed == 3

    def test_integer_is_inclusive(self):
        """Test that both bounds are reachable and nothing outside is drawn."""
        rng = Rng(5)
        draws = {rng.integer(1, 3) for _ in range(200)}
        assert draws == {1, 2, 3}

    def test_sample_draws_without_replacement(self):
        """Test that sampled items are distinct members of the input."""
        items = list("abcdefgh")
        picked = Rng(6).sample(items, 5)

        assert len(picked) == 5
        assert len(set(picked)) == 5
        assert set(picked) <= set(items)

    def test_permutation(self):
        """Test that a permutation contains every index once."""
        order = Rng(8).permutation(20)
        assert sorted(order) == list(range(20))
        assert all(isinstance(i, int) for i in order)

    def test_choice_and_random(self):
        """Test scalar draws stay in range."""
        rng = Rng(10)
        assert rng.choice(["only"]) == "only"
        assert 0.0 <= rng.random() < 1.0
