"""Tests for logging utilities in quartx.app.logging."""

from __future__ import annotations

import logging
from pathlib import Path

import pytest

from quartx.app import logging as quartx_logging


@pytest.fixture(autouse=True)
def reset_logging():
    """Reset root logger before and after each test to avoid cross-test bleed."""
    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
    root.setLevel(logging.NOTSET)
    yield
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()
    root.setLevel(logging.WARNING)


def test_configure_logging_defaults_to_stderr(capsys):
    quartx_logging.configure_logging(level="INFO")
    quartx_logging.get_logger("quartx.test").info("stderr-output")

    captured = capsys.readouterr()
    assert "stderr-output" in captured.err
    assert "INFO quartx.test - stderr-output" in captured.err
    assert captured.out == ""


def test_configure_logging_writes_to_file(tmp_path: Path):
    log_file = tmp_path / "logs" / "quartx.log"

    quartx_logging.configure_logging(level="INFO", log_file=log_file)
    quartx_logging.get_logger("quartx.file").warning("file-output")

    assert log_file.exists()
    assert "file-output" in log_file.read_text(encoding="utf-8")


def test_configure_logging_replaces_handlers(tmp_path: Path):
    first_log = tmp_path / "first.log"
    second_log = tmp_path / "second.log"

    quartx_logging.configure_logging(level="INFO", log_file=first_log)
    quartx_logging.get_logger("quartx.first").info("first")

    quartx_logging.configure_logging(level="INFO", log_file=second_log)
    quartx_logging.get_logger("quartx.second").info("second")

    assert "second" not in first_log.read_text(encoding="utf-8")
    assert "second" in second_log.read_text(encoding="utf-8")


def test_configure_logging_handles_unknown_level_gracefully():
    quartx_logging.configure_logging(level="NOT-A-LEVEL")
    assert logging.getLogger().getEffectiveLevel() == logging.INFO


def test_level_falls_back_to_environment(monkeypatch):
    monkeypatch.setenv(quartx_logging.LOG_LEVEL_ENV, "debug")
    quartx_logging.configure_logging()
    assert logging.getLogger().getEffectiveLevel() == logging.DEBUG


def test_resolve_level_prefers_explicit_value():
    environ = {quartx_logging.LOG_LEVEL_ENV: "ERROR"}
    assert quartx_logging.resolve_level("warning", environ) == logging.WARNING
    assert quartx_logging.resolve_level(None, environ) == logging.ERROR
    assert quartx_logging.resolve_level(None, {}) == logging.INFO


def test_rich_console_handler(capsys):
    quartx_logging.configure_logging(level="INFO", rich_console=True)
    root = logging.getLogger()
    assert type(root.handlers[0]).__name__ == "RichHandler"


def test_get_logger_returns_named_logger_instance():
    logger = quartx_logging.get_logger("quartx.sample")
    assert isinstance(logger, logging.Logger)
    assert logger.name == "quartx.sample"
