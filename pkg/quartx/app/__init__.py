"""Application-level services behind the quartx command line."""

from __future__ import annotations

from .logging import configure_logging, get_logger
from .persistence import emit, read_text, write_text

__all__ = [
    "configure_logging",
    "emit",
    "get_logger",
    "read_text",
    "write_text",
]
