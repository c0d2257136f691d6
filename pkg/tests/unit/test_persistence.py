"""Tests for the text file helpers."""

from __future__ import annotations

from pathlib import Path

from quartx.app.persistence import ENCODING, emit, read_text, write_text


def test_read_and_write_round_trip(tmp_path: Path):
    file_path = tmp_path / "nested" / "tree.nwk"
    content = "((00,01),(10,11));\n"
    write_text(file_path, content)
    assert file_path.read_text(encoding=ENCODING) == content
    assert read_text(file_path) == content


def test_emit_returns_text_without_destination():
    assert emit("60", None) == "60\n"
    assert emit("60\n", None) == "60\n"
    assert emit("60", None, newline=False) == "60"


def test_emit_writes_file(tmp_path: Path):
    out = tmp_path / "report.json"
    assert emit("{}", out) is None
    assert out.read_text(encoding=ENCODING) == "{}\n"
