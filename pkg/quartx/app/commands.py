from __future__ import annotations

import io
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Literal, Optional

from rich.console import Console
from rich.table import Table

from quartx.core import closed_forms as cf
from quartx.core import events, trees
from quartx.core.bitlabel import LeafOrder
from quartx.core.config import DEFAULT_CONFIG, EnumerationConfig
from quartx.core.errors import EnumerationRangeError
from quartx.core.events import CountMethod, CountReport
from quartx.core.topology import Quartet, agree, format_split, prefix_topology, suffix_topology
from quartx.parser import parse_expression

from .logging import get_logger
from .persistence import emit, read_text
from .report import TABLE_COLUMNS, TableRow, VerificationEntry, VerificationReport, table_json

LOGGER = get_logger(__name__)

TABLE_MAX_N = 128
VERIFY_BRUTE_MAX_N = 6
VERIFY_MAX_N = 64
MONOTONIC_MAX_N = 1024
DERIVATIVE_FROM = 11

TableFormat = Literal["tsv", "json", "text"]

######################################################################
# Helpers
######################################################################


def _render_rich(table: Table) -> str:
    buffer = io.StringIO()
    Console(file=buffer, width=120, color_system=None, force_terminal=False).print(table)
    return buffer.getvalue()


def _check_between(value: int, low: int, high: int, what: str) -> None:
    if not (low <= value <= high):
        raise EnumerationRangeError(f"{what} must lie in {low}..{high}, got {value}.")


class _Stopwatch:
    """Milliseconds spent per verification entry, accumulated by key."""

    def __init__(self) -> None:
        self.timing: dict[str, float] = {}

    @contextmanager
    def measure(self, key: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            elapsed = (time.perf_counter() - started) * 1000.0
            self.timing[key] = round(self.timing.get(key, 0.0) + elapsed, 3)


######################################################################
# Table
######################################################################


def table_rows(
    nmin: int, nmax: int, *, rounding: cf.Rounding = cf.Rounding.DOWN
) -> list[TableRow]:
    _check_between(nmin, 2, TABLE_MAX_N, "nmin")
    _check_between(nmax, nmin, TABLE_MAX_N, "nmax")
    rows = []
    for n in range(nmin, nmax + 1):
        value = cf.ratio(n)
        rows.append(
            TableRow(
                n=n,
                leaves=1 << n,
                distance=cf.distance_cf(n),
                total=cf.total_unordered(n),
                ratio_exact=f"{value.numerator}/{value.denominator}",
                ratio=cf.render_decimal(value, 3, rounding),
            )
        )
    return rows


def cmd_table(
    nmin: int,
    nmax: int,
    fmt: TableFormat = "tsv",
    *,
    rounding: cf.Rounding = cf.Rounding.DOWN,
) -> str:
    """Render the distance/ratio table for ``nmin..nmax``."""
    rows = table_rows(nmin, nmax, rounding=rounding)
    if fmt == "json":
        return table_json(rows) + "\n"
    if fmt == "text":
        table = Table(title="Prefix vs. suffix quartet distance")
        for column in TABLE_COLUMNS:
            table.add_column(column, justify="right")
        for row in rows:
            table.add_row(*row.tsv().split("\t"))
        return _render_rich(table)
    lines = ["\t".join(TABLE_COLUMNS), *(row.tsv() for row in rows)]
    return "\n".join(lines) + "\n"


######################################################################
# Verification
######################################################################


def _event_entries(
    event: cf.ClosedFormEvent,
    n: int,
    include_brute: bool,
    config: EnumerationConfig,
    stopwatch: _Stopwatch,
) -> list[VerificationEntry]:
    total_id = cf.EventCaseId(event, cf.CaseId.TOTAL)
    per_case: dict[cf.CaseId, Optional[int]] = {case: None for case in cf.CASES_BY_EVENT[event]}
    brute_total: Optional[int] = None
    if include_brute:
        # One stratified enumeration feeds every case; it is charged to the total entry.
        with stopwatch.measure(total_id.key):
            prefix_pair, suffix_pair = cf.STRATA_PAIRS[event]
            strata = events.count_stratified(
                cf.EVENT_EXPRESSIONS[event],
                n,
                prefix_pair=prefix_pair,
                suffix_pair=suffix_pair,
                config=config,
            )
        per_case = {case: 0 for case in per_case}
        for (l, k), count in strata.items():
            case = cf.case_of(event, n, l, k)
            if case is None:
                LOGGER.warning("%s: %d tuples at (l=%d, k=%d) outside every case", event.value, count, l, k)
            else:
                per_case[case] = (per_case[case] or 0) + count
        brute_total = sum(strata.values())

    entries = []
    for case, brute in [*per_case.items(), (cf.CaseId.TOTAL, brute_total)]:
        case_id = cf.EventCaseId(event, case)
        with stopwatch.measure(case_id.key):
            entries.append(
                VerificationEntry(
                    event=event.value,
                    case=case.value,
                    brute=brute,
                    sum_form=cf.sum_form(case_id, n),
                    closed_form=cf.closed_form(case_id, n),
                )
            )
    return entries


def _combined_entries(
    n: int, include_brute: bool, config: EnumerationConfig, stopwatch: _Stopwatch
) -> list[VerificationEntry]:
    entries = []

    with stopwatch.measure("A/restricted"):
        summed_a = cf.inclusion_exclusion_A_sum(n)
        entries.append(
            VerificationEntry(
                event="A",
                case="restricted",
                brute=events.count_restricted(events.EVENT_A, n, config=config) if include_brute else None,
                sum_form=summed_a,
                closed_form=cf.cf_A_restricted(n),
            )
        )

    with stopwatch.measure("ABC/full"):
        entries.append(
            VerificationEntry(
                event="ABC",
                case="full",
                brute=events.count_full(events.EVENT_ABC, n, config=config) if include_brute else None,
                sum_form=3 * (1 << n) * summed_a,
                closed_form=cf.cf_ABC(n),
            )
        )

    with stopwatch.measure("agreement/unordered"):
        summed_agree, remainder = divmod(3 * summed_a * (1 << n), 24)
        if remainder:
            LOGGER.warning("Summed |A|*2^n*3 = %d is not divisible by 24", 3 * summed_a * (1 << n))
        entries.append(
            VerificationEntry(
                event="agreement",
                case="unordered",
                brute=events.count_agreeing_unordered(n, config=config) if include_brute else None,
                sum_form=summed_agree,
                closed_form=cf.agreeing_unordered_cf(n),
            )
        )

    with stopwatch.measure("distance/unordered"):
        brute_distance = None
        if include_brute:
            brute_distance = trees.quartet_distance(
                trees.build_tree(n, LeafOrder.PREFIX, config=config),
                trees.build_tree(n, LeafOrder.SUFFIX, config=config),
                config=config,
            )
        entries.append(
            VerificationEntry(
                event="distance",
                case="unordered",
                brute=brute_distance,
                sum_form=cf.total_unordered(n) - summed_agree,
                closed_form=cf.distance_cf(n),
            )
        )
    return entries


def cmd_verify(
    n: int,
    *,
    include_brute: bool = False,
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check brute force, summation and closed form against each other for ``n``.

    With ``include_brute`` the enumeration columns are filled (``n <= 6``);
    otherwise only summation and closed form are compared (``n <= 64``).
    """
    _check_between(n, 2, VERIFY_BRUTE_MAX_N if include_brute else VERIFY_MAX_N, "n")
    LOGGER.info("Verifying n=%d (brute force %s)", n, "on" if include_brute else "off")

    stopwatch = _Stopwatch()
    entries: list[VerificationEntry] = []
    for event in cf.ClosedFormEvent:
        entries.extend(_event_entries(event, n, include_brute, config, stopwatch))
    entries.extend(_combined_entries(n, include_brute, config, stopwatch))
    stopwatch.timing["total"] = round(sum(stopwatch.timing.values()), 3)

    report = VerificationReport(n=n, include_brute=include_brute, entries=entries, timing=stopwatch.timing)
    for entry in report.failures():
        LOGGER.warning(
            "Mismatch for %s: brute=%s sum=%s closed=%s",
            entry.key,
            entry.brute,
            entry.sum_form,
            entry.closed_form,
        )
    return report


######################################################################
# Counting & topology
######################################################################

METHOD_NAMES: dict[str, CountMethod] = {
    "brute": CountMethod.BRUTE_RESTRICTED,
    "brute-full": CountMethod.BRUTE_FULL,
    "sum": CountMethod.SUMMATION,
    "closed": CountMethod.CLOSED_FORM,
}


def count_report(
    expr: events.EventExpr,
    n: int,
    method: CountMethod,
    *,
    direct: bool = False,
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> CountReport:
    """Count ``expr`` with ``method``.

    ``brute_restricted``, ``summation`` and ``closed_form`` count tuples with
    ``x0 = 0^n``; ``brute_full`` counts every ordered tuple.
    """
    method = CountMethod(method)
    if method is CountMethod.BRUTE_RESTRICTED:
        value = events.count_restricted(expr, n, config=config)
    elif method is CountMethod.BRUTE_FULL:
        value = events.count_full(expr, n, direct=direct, config=config)
    else:
        value = cf.formula_count(expr, n, summation=method is CountMethod.SUMMATION)
    return CountReport(n=n, expr=expr.describe(), method=method, value=value)


def cmd_count(
    expression: str,
    n: int,
    method: str = "brute",
    *,
    direct: bool = False,
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> CountReport:
    expr = parse_expression(expression)
    report = count_report(expr, n, METHOD_NAMES.get(method, method), direct=direct, config=config)  # type: ignore[arg-type]
    LOGGER.info("%s at n=%d via %s: %d", report.expr, n, report.method.value, report.value)
    return report


def cmd_topology(labels: str) -> str:
    quartet = Quartet.parse(labels)
    lines = [
        f"prefix: {format_split(quartet, prefix_topology(quartet))}",
        f"suffix: {format_split(quartet, suffix_topology(quartet))}",
        f"agree: {'yes' if agree(quartet) else 'no'}",
    ]
    return "\n".join(lines) + "\n"


######################################################################
# Trees
######################################################################


def cmd_newick(
    n: int,
    order: LeafOrder,
    out: Optional[Path] = None,
    *,
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> Optional[str]:
    """Newick text of the ``order`` tree; written to ``out`` when given."""
    tree = trees.build_tree(n, LeafOrder(order), config=config)
    return emit(trees.to_newick(tree), out)


def cmd_distance(
    tree1: Path, tree2: Path, *, config: EnumerationConfig = DEFAULT_CONFIG
) -> int:
    first = trees.parse_newick(read_text(tree1))
    second = trees.parse_newick(read_text(tree2))
    distance = trees.quartet_distance(first, second, config=config)
    LOGGER.info("Quartet distance between %s and %s: %d", tree1, tree2, distance)
    return distance


######################################################################
# Monotonicity
######################################################################


def cmd_monotonic(nmax: int) -> tuple[str, bool]:
    """Check strict decrease of the ratio and the sign of the derivative up to ``nmax``.

    Returns the rendered listing and whether every check passed.
    """
    _check_between(nmax, 3, MONOTONIC_MAX_N, "nmax")
    bound = Fraction(2, 3)
    passed = True

    table = Table(title=f"Monotonicity for n = 2..{nmax}")
    for column in ("n", "R(n) > R(n+1)", "ratio > 2/3", "derivative < 0"):
        table.add_column(column, justify="right")
    for n in range(2, nmax + 1):
        decreasing = cf.monotone_crossdiff(n) > 0
        above = cf.ratio(n) > bound
        negative = cf.derivative_value(n) < 0 if n >= DERIVATIVE_FROM else None
        passed = passed and decreasing and above and negative is not False
        table.add_row(
            str(n),
            "yes" if decreasing else "NO",
            "yes" if above else "NO",
            "-" if negative is None else ("yes" if negative else "NO"),
        )
    LOGGER.info("Monotonicity up to n=%d: %s", nmax, "pass" if passed else "FAIL")
    return _render_rich(table) + ("pass\n" if passed else "FAIL\n"), passed


__all__ = [
    "METHOD_NAMES",
    "cmd_count",
    "cmd_distance",
    "cmd_monotonic",
    "cmd_newick",
    "cmd_table",
    "cmd_topology",
    "cmd_verify",
    "count_report",
    "table_rows",
]
