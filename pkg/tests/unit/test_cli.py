"""Tests for the quartx.cli module."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from quartx import cli
from quartx.core import closed_forms as cf
from quartx.core.config import WORKERS_ENV


def test_main_version_flag(capsys, monkeypatch):
    monkeypatch.setattr(cli, "__version__", "1.2.3")
    exit_code = cli.main(["--version"])
    captured = capsys.readouterr()
    assert exit_code == 0
    assert captured.out.strip() == "1.2.3"


def test_table_command_prints_tsv(capsys):
    assert cli.main(["table", "--nmin", "3", "--nmax", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1].split("\t")[2:] == ["60", "70", "6/7", "0.857"]
    assert out[2].split("\t")[2] == "1452"


def test_table_command_writes_file(tmp_path: Path, capsys):
    out = tmp_path / "table.json"
    assert cli.main(["table", "--nmin", "3", "--nmax", "3", "--format", "json", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["rows"][0]["distance"] == 60


def test_verify_command_exit_codes(capsys, monkeypatch):
    assert cli.main(["verify", "--n", "3", "--brute"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["overall_pass"] is True

    original = cf.POLYNOMIALS["ALL4/case2"]
    perturbed = cf.Polynomial(original.terms + ((Fraction(2), 0, 0),))
    monkeypatch.setitem(cf.POLYNOMIALS, "ALL4/case2", perturbed)
    assert cli.main(["verify", "--n", "5"]) == 1


def test_count_command(capsys):
    assert cli.main(["count", "--event", "P01&S23", "--n", "3", "--method", "closed"]) == 0
    assert capsys.readouterr().out == "6\n"


def test_topology_command(capsys):
    assert cli.main(["topology", "--labels", "0111,0110,1000,1001"]) == 0
    assert "agree: no" in capsys.readouterr().out


def test_newick_and_distance_commands(tmp_path: Path, capsys):
    first = tmp_path / "prefix.nwk"
    second = tmp_path / "suffix.nwk"
    assert cli.main(["newick", "--n", "3", "--order", "prefix", "--out", str(first)]) == 0
    assert cli.main(["newick", "--n", "3", "--order", "suffix", "--out", str(second)]) == 0
    capsys.readouterr()
    assert cli.main(["distance", "--tree1", str(first), "--tree2", str(second)]) == 0
    assert capsys.readouterr().out == "60\n"


def test_newick_command_prints_to_stdout(capsys):
    assert cli.main(["newick", "--n", "2", "--order", "suffix"]) == 0
    assert capsys.readouterr().out == "((00,10),(01,11));\n"


def test_monotonic_command(capsys):
    assert cli.main(["monotonic", "--nmax", "20"]) == 0
    assert capsys.readouterr().out.endswith("pass\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--event", "P01&", "--n", "3"],
        ["count", "--event", "P02", "--n", "3", "--method", "sum"],
        ["verify", "--n", "7", "--brute"],
        ["topology", "--labels", "00,01,10"],
        ["table", "--nmin", "5", "--nmax", "4"],
        ["count", "--event", "P01&S23", "--n", "3", "--direct"],
        ["count", "--event", "P01&S23", "--n", "3", "--method", "closed", "--direct"],
        [],
    ],
)
def test_usage_errors_exit_with_code_2(argv):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv)
    assert excinfo.value.code == 2


def test_missing_tree_file_exits_with_code_2(tmp_path: Path):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["distance", "--tree1", str(tmp_path / "a.nwk"), "--tree2", str(tmp_path / "b.nwk")])
    assert excinfo.value.code == 2


def test_configure_logging_delegates_to_app_logging(tmp_path: Path, monkeypatch):
    called: dict[str, object] = {}

    def fake_configure(*, level: str, log_file: Path | None, format_string: str, rich_console: bool):
        called["level"] = level
        called["rich_console"] = rich_console
        called["log_file"] = log_file
        called["format"] = format_string

    monkeypatch.setattr(cli.app_logging, "configure_logging", fake_configure)

    log_path = tmp_path / "quartx.log"
    cli.configure_logging("DEBUG", str(log_path))

    assert called["level"] == "DEBUG"
    assert called["log_file"] == log_path.resolve()
    assert called["format"] == cli.app_logging.DEFAULT_LOG_FORMAT
    assert called["rich_console"] is False


def test_rich_log_flag_reaches_app_logging(monkeypatch, capsys):
    seen: list[bool] = []
    monkeypatch.setattr(
        cli.app_logging,
        "configure_logging",
        lambda **kwargs: seen.append(kwargs["rich_console"]),
    )

    assert cli.main(["--rich-log", "topology", "--labels", "0000,0001,0010,0110"]) == 0
    assert seen == [True]
    assert "agree: yes" in capsys.readouterr().out


def test_build_parser_uses_env_default(monkeypatch):
    monkeypatch.setenv(cli.app_logging.LOG_LEVEL_ENV, "DEBUG")
    args = cli.build_parser().parse_args([])
    assert args.log_level == "DEBUG"


def test_resolve_config_merges_env_and_flags(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "3")
    args = cli.build_parser().parse_args(["--allow-large", "table"])
    config = cli.resolve_config(args)
    assert config.workers == 3
    assert config.allow_large is True

    args = cli.build_parser().parse_args(["--workers", "2", "table"])
    assert cli.resolve_config(args).workers == 2


def test_distance_on_deep_trees_reports_leaf_cap(tmp_path: Path, capsys):
    text = "a0"
    for i in range(1, 1500):
        text = f"({text},a{i})"
    tree = tmp_path / "ladder.nwk"
    tree.write_text(text + ";\n", encoding="utf-8")

    with pytest.raises(SystemExit) as excinfo:
        cli.main(["distance", "--tree1", str(tree), "--tree2", str(tree)])
    assert excinfo.value.code == 2
    assert "at most 256 leaves" in capsys.readouterr().err
