from __future__ import annotations

from pathlib import Path
from typing import Optional

from .logging import get_logger

ENCODING = "utf-8"
LOGGER = get_logger(__name__)


def read_text(path: Path, *, encoding: str = ENCODING) -> str:
    """Read and return the contents of ``path`` as UTF-8 text by default."""
    LOGGER.debug("Reading %s", path)
    return path.read_text(encoding=encoding)


def write_text(path: Path, content: str, *, encoding: str = ENCODING) -> None:
    """Write ``content`` to ``path``, creating missing parent directories."""
    LOGGER.debug("Writing %s", path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding=encoding)


def emit(content: str, out: Optional[Path], *, newline: bool = True) -> Optional[str]:
    """Write ``content`` to ``out`` or return it for printing when ``out`` is ``None``.

    A trailing newline is added unless ``content`` already ends with one.
    """
    if newline and not content.endswith("\n"):
        content = f"{content}\n"
    if out is None:
        return content
    write_text(out, content)
    LOGGER.info("Wrote %s", out)
    return None
