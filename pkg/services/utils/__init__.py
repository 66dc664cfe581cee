"""Utility modules."""

from services.utils.file_io import atomic_write_bytes, atomic_write_lines
from services.utils.text_utils import slugify, tokenize

__all__ = [
    "atomic_write_bytes",
    "atomic_write_lines",
    "slugify",
    "tokenize",
]
