"""Tests for text_utils module."""

from services.utils.text_utils import slugify, tokenize


class TestTokenize:
    """Test cases for tokenize."""

    def test_lowercases_and_splits(self):
        """Test splitting on punctuation and whitespace."""
        assert tokenize("Spur-Gear, 20 Teeth!") == ["spur", "gear", "20", "teeth"]

    def test_keeps_duplicates(self):
        """Test that repeated tokens are kept in order."""
        assert tokenize("hub hub  HUB") == ["hub", "hub", "hub"]

    def test_underscore_separates(self):
        """Test that underscores are separators, not word characters."""
        assert tokenize("gear_tooth") == ["gear", "tooth"]

    def test_unicode_letters(self):
        """Test that accented letters stay inside tokens."""
        assert tokenize("Rad für Zahnräder") == ["rad", "für", "zahnräder"]

    def test_empty(self):
        """Test that blank text has no tokens."""
        assert tokenize("  ..  ") == []


class TestSlugify:
    """Test cases for slugify."""

    def test_slug(self):
        """Test a category name slug."""
        assert slugify("Robotic Arm") == "robotic-arm"

    def test_collapses_separators(self):
        """Test that runs of separators give one hyphen."""
        assert slugify("  Wheel -- (Alloy) ") == "wheel-alloy"
