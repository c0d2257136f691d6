"""Logging setup for the quartx command line and library modules."""

from __future__ import annotations

import logging
import os
import sys
from pathlib import Path
from typing import Mapping, Optional

from rich.logging import RichHandler

DEFAULT_LOG_FORMAT = "%(levelname)s %(name)s - %(message)s"
LOG_LEVEL_ENV = "QUARTX_LOG_LEVEL"
DEFAULT_LEVEL = "INFO"


def resolve_level(level: Optional[str] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    """Turn a level name into a ``logging`` constant.

    An explicit ``level`` wins over ``QUARTX_LOG_LEVEL``; unknown names fall
    back to INFO.
    """
    env = os.environ if environ is None else environ
    name = level or env.get(LOG_LEVEL_ENV) or DEFAULT_LEVEL
    value = logging.getLevelName(name.strip().upper())
    return value if isinstance(value, int) else logging.INFO


def configure_logging(
    *,
    level: Optional[str] = None,
    log_file: Optional[Path] = None,
    format_string: str = DEFAULT_LOG_FORMAT,
    rich_console: bool = False,
) -> None:
    """Configure root logging for quartx.

    Parameters
    ----------
    level:
        Level name such as "INFO" or "DEBUG". Defaults to ``QUARTX_LOG_LEVEL``
        and then INFO.
    log_file:
        Optional path that receives a copy of every record.
    format_string:
        Formatter template for the plain stream and file handlers.
    rich_console:
        Render console records through ``rich`` instead of a plain stream.
    """
    root_logger = logging.getLogger()

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    console: logging.Handler
    if rich_console:
        console = RichHandler(show_path=False, markup=False)
    else:
        console = logging.StreamHandler(sys.stderr)
    handlers: list[logging.Handler] = [console]

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    logging.basicConfig(
        level=resolve_level(level),
        format=format_string,
        handlers=handlers,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
