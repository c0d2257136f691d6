from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Iterable, Optional

from quartx import __version__
from quartx.app import commands, logging as app_logging
from quartx.app.persistence import emit
from quartx.core.bitlabel import LeafOrder
from quartx.core.closed_forms import Rounding
from quartx.core.config import EnumerationConfig

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartx",
        description=(
            "Count and verify quartet disagreements between the prefix and suffix "
            "trees on {0,1}^n."
        ),
    )
    parser.add_argument(
        "--version",
        action="store_true",
        help="Show the quartx version and exit.",
    )
    parser.add_argument(
        "--log-level",
        default=os.environ.get(app_logging.LOG_LEVEL_ENV, app_logging.DEFAULT_LEVEL),
        help=(
            "Logging level (DEBUG, INFO, WARNING, ERROR). "
            f"Defaults to ${app_logging.LOG_LEVEL_ENV} or {app_logging.DEFAULT_LEVEL} if unset."
        ),
    )
    parser.add_argument(
        "--log-file",
        help="Optional file path to tee logs in addition to stderr.",
    )
    parser.add_argument(
        "--rich-log",
        action="store_true",
        help="Render console log records with rich instead of plain stderr lines.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        help="Worker processes for enumeration (default: $QUARTX_WORKERS or 1).",
    )
    parser.add_argument(
        "--allow-large",
        action="store_true",
        help="Allow the 4-subset agreement scan at n=8.",
    )

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    table = sub.add_parser("table", help="Distance and ratio for a range of n.")
    table.add_argument("--nmin", type=int, default=3)
    table.add_argument("--nmax", type=int, default=10)
    table.add_argument("--format", choices=("tsv", "json", "text"), default="tsv")
    table.add_argument(
        "--rounding",
        choices=[mode.value for mode in Rounding],
        default=Rounding.DOWN.value,
        help="How the 3-decimal ratio is rounded (default: down).",
    )
    table.add_argument("--out", type=Path)

    verify = sub.add_parser("verify", help="Cross-check enumeration, summations and closed forms.")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--brute", action="store_true", help="Include brute-force counts (n <= 6).")
    verify.add_argument("--out", type=Path)

    count = sub.add_parser("count", help="Count ordered 4-tuples satisfying an event expression.")
    count.add_argument("--event", required=True, help='Expression such as "(P01|P23)&(S01|S23)".')
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--method", choices=tuple(commands.METHOD_NAMES), default="brute")
    count.add_argument(
        "--direct",
        action="store_true",
        help="Enumerate every tuple instead of scaling (n <= 4). Only valid with --method brute-full.",
    )

    topology = sub.add_parser("topology", help="Prefix and suffix splits of four labels.")
    topology.add_argument("--labels", required=True, help="Four comma separated bit strings.")

    newick = sub.add_parser("newick", help="Export the prefix or suffix tree.")
    newick.add_argument("--n", type=int, required=True)
    newick.add_argument("--order", choices=[order.value for order in LeafOrder], required=True)
    newick.add_argument("--out", type=Path)

    distance = sub.add_parser("distance", help="Quartet distance between two Newick files.")
    distance.add_argument("--tree1", type=Path, required=True)
    distance.add_argument("--tree2", type=Path, required=True)

    monotonic = sub.add_parser("monotonic", help="Check the ratio decreases towards 2/3.")
    monotonic.add_argument("--nmax", type=int, default=128)
    return parser


def configure_logging(level: str, log_file: Optional[str], *, rich_console: bool = False) -> None:
    file_path = Path(log_file).expanduser().resolve() if log_file else None
    app_logging.configure_logging(
        level=level,
        log_file=file_path,
        format_string=app_logging.DEFAULT_LOG_FORMAT,
        rich_console=rich_console,
    )


def resolve_config(args: argparse.Namespace) -> EnumerationConfig:
    config = EnumerationConfig.from_env()
    if args.workers is not None:
        config = config.with_workers(args.workers)
    if args.allow_large:
        config = replace(config, allow_large=True)
    return config


def _print(text: Optional[str]) -> None:
    if text:
        sys.stdout.write(text)


def dispatch(args: argparse.Namespace, config: EnumerationConfig) -> int:
    if args.command == "table":
        text = commands.cmd_table(args.nmin, args.nmax, args.format, rounding=Rounding(args.rounding))
        _print(emit(text, args.out))
        return EXIT_OK
    if args.command == "verify":
        report = commands.cmd_verify(args.n, include_brute=args.brute, config=config)
        _print(emit(report.to_json(), args.out))
        return EXIT_OK if report.overall_pass else EXIT_FAILED
    if args.command == "count":
        if args.direct and args.method != "brute-full":
            raise ValueError("--direct requires --method brute-full.")
        report = commands.cmd_count(
            args.event, args.n, args.method, direct=args.direct, config=config
        )
        _print(f"{report.value}\n")
        return EXIT_OK
    if args.command == "topology":
        _print(commands.cmd_topology(args.labels))
        return EXIT_OK
    if args.command == "newick":
        _print(commands.cmd_newick(args.n, LeafOrder(args.order), args.out, config=config))
        return EXIT_OK
    if args.command == "distance":
        _print(f"{commands.cmd_distance(args.tree1, args.tree2, config=config)}\n")
        return EXIT_OK
    if args.command == "monotonic":
        text, passed = commands.cmd_monotonic(args.nmax)
        _print(text)
        return EXIT_OK if passed else EXIT_FAILED
    raise ValueError("A command is required.")


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)

    if args.version:
        print(__version__)
        return EXIT_OK

    configure_logging(args.log_level, args.log_file, rich_console=args.rich_log)
    try:
        config = resolve_config(args)
        return dispatch(args, config)
    except (ValueError, OSError) as exc:
        parser.error(str(exc))
        return EXIT_USAGE  # pragma: no cover (argparse.error exits)


if __name__ == "__main__":
    sys.exit(main())
