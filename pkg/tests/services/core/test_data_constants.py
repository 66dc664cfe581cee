"""Tests for core.data_constants module."""

from services.core.constants import CATEGORIES
from services.core.data_constants import (
    CATEGORY_PROFILES,
    CATEGORY_VOCABULARIES,
    PART_LINKAGES,
    SHARED_VOCABULARY,
    SYNTHETIC_AUTHORS,
    SYNTHETIC_COMMENTS,
)
from services.utils.text_utils import tokenize


def vocabulary_tokens(vocabulary):
    tokens = set()
    for values in vocabulary.values():
        for value in [values] if isinstance(values, str) else values:
            tokens.update(tokenize(value))
    return tokens


class TestCategoryVocabularies:
    """Test the planted vocabularies."""

    def test_every_category_present(self):
        """Test one vocabulary and one profile per category."""
        assert set(CATEGORY_VOCABULARIES) == set(CATEGORIES)
        assert set(CATEGORY_PROFILES) == set(CATEGORIES)

    def test_planted_tokens_are_exclusive(self):
        """Test that no planted token appears in another category or the shared pool."""
        shared = vocabulary_tokens(SHARED_VOCABULARY)
        planted = {c: vocabulary_tokens(v) for c, v in CATEGORY_VOCABULARIES.items()}
        for category, tokens in planted.items():
            assert not tokens & shared, category
            for other, other_tokens in planted.items():
                if other != category:
                    assert not tokens & other_tokens, (category, other)

    def test_slots(self):
        """Test that every vocabulary fills every text slot."""
        for vocabulary in CATEGORY_VOCABULARIES.values():
            assert set(vocabulary) == {
                "stem",
                "adjectives",
                "nouns",
                "description",
                "components",
                "tags",
            }


class TestCategoryProfiles:
    """Test the structural profiles."""

    def test_ranges_and_linkage(self):
        """Test ordered count ranges and a known linkage."""
        for profile in CATEGORY_PROFILES.values():
            low, high = profile["parts"]
            assert 1 <= low <= high
            low, high = profile["tags"]
            assert 0 <= low <= high
            assert profile["linkage"] in PART_LINKAGES

    def test_enough_vocabulary(self):
        """Test that each category can fill its largest part and tag counts."""
        for category, profile in CATEGORY_PROFILES.items():
            vocabulary = CATEGORY_VOCABULARIES[category]
            assert len(vocabulary["components"]) >= profile["parts"][1]
            assert len(vocabulary["tags"]) >= profile["tags"][1]
            assert len(SHARED_VOCABULARY["components"]) >= profile["parts"][1]
            assert len(SHARED_VOCABULARY["tags"]) >= profile["tags"][1]

    def test_parts_and_tags_share_no_tokens(self):
        """Test that only the linkage can connect attribute nodes."""
        for category, vocabulary in CATEGORY_VOCABULARIES.items():
            components = vocabulary_tokens({"c": vocabulary["components"]})
            tags = vocabulary_tokens({"t": vocabulary["tags"]})
            assert not components & tags, category
            assert vocabulary["stem"] not in components | tags, category
            assert all(len(tokenize(c)) == 1 for c in vocabulary["components"]), category
        shared_components = vocabulary_tokens({"c": SHARED_VOCABULARY["components"]})
        assert not shared_components & vocabulary_tokens({"t": SHARED_VOCABULARY["tags"]})


class TestSyntheticPools:
    """Test author and comment pools."""

    def test_non_empty_and_unique(self):
        """Test that authors are unique and comments non-empty."""
        assert len(set(SYNTHETIC_AUTHORS)) == len(SYNTHETIC_AUTHORS)
        assert SYNTHETIC_COMMENTS
        assert all(comment.strip() for comment in SYNTHETIC_COMMENTS)
