"""Deterministic feature-hashing text embedder.

Stands in for a pretrained word embedding: no model files, identical output on
every machine. Each token is hashed with 64-bit BLAKE2b; the low bits pick a
coordinate (``h mod dim``) and the top bit picks the sign. Counts accumulate and
the result is L2-normalized unless it is the zero vector.
"""

import hashlib
from functools import lru_cache
from typing import Tuple

import numpy as np

from api.exceptions import ValidationError
from services.core.interfaces import FloatArray, ITextEmbedder
from services.utils.text_utils import tokenize


@lru_cache(maxsize=65536)
def token_slot(token: str, dim: int) -> Tuple[int, float]:
    """Coordinate and sign a token contributes to."""
    digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
    h = int.from_bytes(digest, "little")
    return h % dim, -1.0 if h >> 63 else 1.0


def hash_embed(text: str, dim: int) -> FloatArray:
    """Embed ``text`` into ``dim`` dimensions; empty text maps to zeros."""
    if dim < 2:
        raise ValidationError(f"Embedding dimension must be at least 2, got {dim}")
    vector = np.zeros(dim, dtype=np.float64)
    for token in tokenize(text):
        index, sign = token_slot(token, dim)
        vector[index] += sign
    norm = np.linalg.norm(vector)
    if norm > 0.0:
        vector /= norm
    return vector


class HashEmbedder(ITextEmbedder):
    def __init__(self, dim: int):
        if dim < 2:
            raise ValidationError(f"Embedding dimension must be at least 2, got {dim}")
        self._dim = dim

    @property
    def dim(self) -> int:
        return self._dim

    def embed(self, text: str) -> FloatArray:
        return hash_embed(text, self._dim)
