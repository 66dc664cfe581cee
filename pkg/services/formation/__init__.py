from services.formation.embedding import HashEmbedder, hash_embed
from services.formation.sample_generator import (
    form_corpus,
    form_product_network,
    form_subgraph,
    product_text,
)
from services.formation.synthesizer import parse_counts, synth_corpus

__all__ = [
    "HashEmbedder",
    "form_corpus",
    "form_product_network",
    "form_subgraph",
    "hash_embed",
    "parse_counts",
    "product_text",
    "synth_corpus",
]
