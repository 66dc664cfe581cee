"""Atomic file writes.

Outputs are written to a temporary file in the destination directory and moved
into place with ``os.replace``, so a failed command never leaves a partial file
behind and readers never observe a half-written one.
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import Union

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def atomic_write_bytes(path: PathLike, data: bytes) -> None:
    """Write ``data`` to ``path`` atomically."""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, temp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=directory)
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(temp_name, target)
    except BaseException:
        if os.path.exists(temp_name):
            os.unlink(temp_name)
        raise
    logger.debug(f"Wrote {len(data)} bytes to {target}")


def atomic_write_lines(path: PathLike, lines) -> None:
    """Write an iterable of ``bytes`` lines, each terminated by a newline."""
    atomic_write_bytes(path, b"".join(line + b"\n" for line in lines))
