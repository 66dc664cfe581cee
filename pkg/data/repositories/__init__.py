from data.repositories.corpus_repository import (
    CorpusFormatError,
    CorpusRepositoryInterface,
    JsonLinesCorpusRepository,
    load_corpus,
    save_corpus,
)
from data.repositories.graph_repository import (
    GraphFileError,
    load_graphs,
    save_graphs,
)

__all__ = [
    "CorpusFormatError",
    "CorpusRepositoryInterface",
    "GraphFileError",
    "JsonLinesCorpusRepository",
    "load_corpus",
    "load_graphs",
    "save_corpus",
    "save_graphs",
]
