"""JSON-lines corpus store.

Layout (UTF-8, one JSON object per line, keys sorted)::

    {"format_version": 1, "kind": "corpus", "labels": ["Airplane", ...]}
    {"author": ..., "category": "Car", "comments": [...], "description": ...,
     "id": "car-00000", "likes": 17, "name": ..., "parts": [...], "tags": [...],
     "timestamp": "2019-03-04T05:06:07+00:00"}
    ...

The first line is the header; every following line is one ProductRecord with
exactly the ProductRecord field names.
"""

import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Union

import orjson
import pydantic

from api.exceptions import ValidationError
from data.models.product_record import Corpus, ProductRecord
from services.core.constants import CORPUS_FORMAT_VERSION
from services.utils.file_io import atomic_write_lines

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class CorpusFormatError(ValidationError):
    """A corpus file line could not be parsed."""

    def __init__(self, path: PathLike, line: int, field: str, reason: str):
        super().__init__(
            f"{path}: line {line}: field {field!r}: {reason}",
            details={"path": str(path), "line": line, "field": field},
        )
        self.line = line
        self.field = field


class CorpusRepositoryInterface(ABC):
    """Abstract interface for corpus persistence."""

    @abstractmethod
    def save(self, corpus: Corpus, path: PathLike) -> None:
        """Write ``corpus`` to ``path``."""

    @abstractmethod
    def load(self, path: PathLike) -> Corpus:
        """Read a corpus from ``path``."""


class JsonLinesCorpusRepository(CorpusRepositoryInterface):
    def save(self, corpus: Corpus, path: PathLike) -> None:
        header = {
            "format_version": CORPUS_FORMAT_VERSION,
            "kind": "corpus",
            "labels": list(corpus.labels),
        }
        lines = [orjson.dumps(header, option=orjson.OPT_SORT_KEYS)]
        lines.extend(
            orjson.dumps(record.model_dump(mode="json"), option=orjson.OPT_SORT_KEYS)
            for record in corpus.records
        )
        atomic_write_lines(path, lines)
        logger.info(f"Saved {len(corpus)} records to {path}")

    def load(self, path: PathLike) -> Corpus:
        with open(path, "rb") as handle:
            raw_lines = handle.read().splitlines()
        if not raw_lines:
            raise CorpusFormatError(path, 1, "format_version", "missing header line")

        header = self._parse_line(path, 1, raw_lines[0])
        version = header.get("format_version")
        if version != CORPUS_FORMAT_VERSION:
            raise CorpusFormatError(
                path, 1, "format_version", f"unsupported version {version!r}"
            )
        labels = header.get("labels")
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise CorpusFormatError(path, 1, "labels", "expected a list of strings")

        records = []
        for number, raw in enumerate(raw_lines[1:], start=2):
            if not raw.strip():
                continue
            data = self._parse_line(path, number, raw)
            try:
                records.append(ProductRecord.model_validate(data))
            except pydantic.ValidationError as exc:
                error = exc.errors()[0]
                field = ".".join(str(part) for part in error["loc"]) or "<record>"
                raise CorpusFormatError(path, number, field, error["msg"]) from None
        corpus = Corpus(records=tuple(records), labels=tuple(labels))
        logger.info(f"Loaded {len(corpus)} records from {path}")
        return corpus

    @staticmethod
    def _parse_line(path: PathLike, number: int, raw: bytes) -> dict:
        try:
            data = orjson.loads(raw)
        except orjson.JSONDecodeError as exc:
            raise CorpusFormatError(path, number, "<json>", exc.msg) from None
        if not isinstance(data, dict):
            raise CorpusFormatError(path, number, "<json>", "expected a JSON object")
        return data


def save_corpus(corpus: Corpus, path: PathLike) -> None:
    JsonLinesCorpusRepository().save(corpus, path)


def load_corpus(path: PathLike) -> Corpus:
    return JsonLinesCorpusRepository().load(path)
