"""General text processing utilities.

This module contains text manipulation functions that are not specific to
product metadata or any particular schema.
"""

import re
from typing import List

_TOKEN_PATTERN = re.compile(r"[^\W_]+")


def tokenize(text: str) -> List[str]:
    """Lowercase ``text`` and split it on runs of non-alphanumeric characters.

    Args:
        text: The text to split

    Returns:
        Tokens in their order of appearance, duplicates kept
    """
    return _TOKEN_PATTERN.findall(text.lower())


def slugify(text: str) -> str:
    """Lowercase alphanumeric tokens joined by hyphens."""
    return "-".join(tokenize(text))
