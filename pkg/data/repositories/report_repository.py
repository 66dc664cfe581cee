"""JSON documents written by the CLI: metrics, train reports, query results."""

import logging
from pathlib import Path
from typing import Type, TypeVar, Union

import orjson
import pydantic
from pydantic import BaseModel

from api.exceptions import ValidationError
from services.utils.file_io import atomic_write_bytes, atomic_write_lines

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
DocumentT = TypeVar("DocumentT", bound=BaseModel)

_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def dump_document(document: BaseModel) -> bytes:
    return orjson.dumps(document.model_dump(mode="json"), option=_OPTIONS) + b"\n"


def save_document(document: BaseModel, path: PathLike) -> None:
    atomic_write_bytes(path, dump_document(document))
    logger.info(f"Wrote {type(document).__name__} to {path}")


def save_documents(documents, path: PathLike) -> None:
    """One compact JSON object per line."""
    atomic_write_lines(
        path,
        [
            orjson.dumps(d.model_dump(mode="json"), option=orjson.OPT_SORT_KEYS)
            for d in documents
        ],
    )


def load_document(path: PathLike, document_type: Type[DocumentT]) -> DocumentT:
    with open(path, "rb") as handle:
        content = handle.read()
    try:
        return document_type.model_validate(orjson.loads(content))
    except orjson.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON at byte offset {exc.pos}") from None
    except pydantic.ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ValidationError(f"{path}: field {field!r}: {error['msg']}") from None
