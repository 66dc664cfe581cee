"""Self-describing model file.

A single JSON document (keys sorted)::

    {
      "format_version": 1,
      "kind": "sgcnn-model",
      "config": {<SgcnnConfig fields>},
      "parameters": {
        "aggregation.weights": {"shape": [2], "dtype": "<f8", "data": "<base64>"},
        "conv.0.kernels": {"shape": [16, 4, 4], "dtype": "<f8", "data": "..."},
        ...
      }
    }

``data`` is the base64 encoding of the array's little-endian float64 bytes in
row-major order, so loading reproduces every parameter bit for bit.
"""

import base64
import binascii
import logging
from pathlib import Path
from typing import Dict, Union

import numpy as np
import orjson
import pydantic

from api.exceptions import ValidationError
from data.models.configs import SgcnnConfig
from services.core.constants import MODEL_FORMAT_VERSION
from services.numerics.rng import Rng
from services.sgcnn.model import SgcnnModel
from services.utils.file_io import atomic_write_bytes

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_DTYPE = "<f8"


class ModelFileError(ValidationError):
    def __init__(self, path: PathLike, reason: str):
        super().__init__(f"{path}: {reason}", details={"path": str(path)})


def encode_array(array: np.ndarray) -> dict:
    data = np.ascontiguousarray(array, dtype=_DTYPE).tobytes()
    return {
        "shape": list(array.shape),
        "dtype": _DTYPE,
        "data": base64.b64encode(data).decode("ascii"),
    }


def decode_array(entry: dict) -> np.ndarray:
    if entry.get("dtype") != _DTYPE:
        raise ValueError(f"unsupported dtype {entry.get('dtype')!r}")
    shape = tuple(int(d) for d in entry["shape"])
    raw = base64.b64decode(entry["data"], validate=True)
    values = np.frombuffer(raw, dtype=_DTYPE)
    if values.size != int(np.prod(shape)):
        raise ValueError(f"{values.size} values do not fill shape {shape}")
    return values.astype(np.float64).reshape(shape)


def model_to_bytes(model: SgcnnModel) -> bytes:
    document = {
        "format_version": MODEL_FORMAT_VERSION,
        "kind": "sgcnn-model",
        "config": model.config.model_dump(mode="json"),
        "parameters": {
            name: encode_array(array) for name, array in model.parameters().items()
        },
    }
    return orjson.dumps(document, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)


def save_model(model: SgcnnModel, path: PathLike) -> None:
    atomic_write_bytes(path, model_to_bytes(model))
    logger.info(f"Saved model ({model.num_parameters} parameters) to {path}")


def load_model(path: PathLike) -> SgcnnModel:
    with open(path, "rb") as handle:
        content = handle.read()
    try:
        document = orjson.loads(content)
    except orjson.JSONDecodeError as exc:
        raise ModelFileError(path, f"invalid JSON at byte offset {exc.pos}") from None
    if not isinstance(document, dict) or document.get("kind") != "sgcnn-model":
        raise ModelFileError(path, "not an SGCNN model file")
    if document.get("format_version") != MODEL_FORMAT_VERSION:
        raise ModelFileError(
            path, f"unsupported format_version {document.get('format_version')!r}"
        )

    try:
        config = SgcnnConfig.model_validate(document.get("config"))
    except pydantic.ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ModelFileError(path, f"config field {field!r}: {error['msg']}") from None

    parameters: Dict[str, np.ndarray] = {}
    for name, entry in (document.get("parameters") or {}).items():
        try:
            parameters[name] = decode_array(entry)
        except (KeyError, TypeError, ValueError, binascii.Error) as exc:
            raise ModelFileError(path, f"parameter {name!r}: {exc}") from None

    model = SgcnnModel.initialize(config, Rng(0))
    model.load_parameters(parameters)
    logger.info(f"Loaded model with labels {list(config.labels)} from {path}")
    return model
