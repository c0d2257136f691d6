"""Prefix/suffix maximality events over ordered 4-tuples and their brute-force counts.

``P_ij`` holds when the common prefix of ``x_i`` and ``x_j`` is not shorter
than any of the other five common prefixes (ties allowed); ``S_ij`` is the
suffix analogue. Events combine with ``&`` and ``|`` into expression trees.

Lengths of common prefixes and suffixes do not change when every label is
XOR-ed with the same value, so counting tuples with ``x0 = 0^n`` and scaling
by ``2^n`` gives the unrestricted count. The direct full enumeration exists
to check that on small ``n``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence, Union

from pydantic import BaseModel, Field

from quartx.app.logging import get_logger

from .bitlabel import MIN_WIDTH
from .config import DEFAULT_CONFIG, EnumerationConfig
from .errors import EnumerationRangeError, QuartxError
from .parallel import run_chunks
from .topology import (
    PAIR_ORDER,
    Quartet,
    agree_bits,
    prefix_scores,
    suffix_scores,
)

LOGGER = get_logger(__name__)


class EventKind(str, Enum):
    PREFIX_MAX = "P"
    SUFFIX_MAX = "S"


@dataclass(frozen=True, order=True)
class AtomicEvent:
    """``P_ij`` (prefix maximum) or ``S_ij`` (suffix maximum) with ``i < j``."""

    kind: EventKind
    i: int
    j: int

    def __post_init__(self) -> None:
        if not (0 <= self.i < self.j <= 3):
            raise QuartxError(f"Atomic events need 0 <= i < j <= 3, got ({self.i}, {self.j}).")

    @property
    def slot(self) -> int:
        return PAIR_ORDER.index((self.i, self.j))

    def holds_scores(self, prefix: Sequence[int], suffix: Sequence[int]) -> bool:
        scores = prefix if self.kind is EventKind.PREFIX_MAX else suffix
        return scores[self.slot] == max(scores)

    def describe(self) -> str:
        return f"{self.kind.value}{self.i}{self.j}"

    def dnf(self) -> frozenset[frozenset["AtomicEvent"]]:
        return frozenset({frozenset({self})})


@dataclass(frozen=True)
class Conjunction:
    operands: tuple["EventExpr", ...]

    def holds_scores(self, prefix: Sequence[int], suffix: Sequence[int]) -> bool:
        return all(operand.holds_scores(prefix, suffix) for operand in self.operands)

    def describe(self) -> str:
        parts = []
        for operand in self.operands:
            text = operand.describe()
            parts.append(f"({text})" if isinstance(operand, Disjunction) else text)
        return "&".join(parts)

    def dnf(self) -> frozenset[frozenset[AtomicEvent]]:
        terms: frozenset[frozenset[AtomicEvent]] = frozenset({frozenset()})
        for operand in self.operands:
            terms = frozenset(
                left | right for left in terms for right in operand.dnf()
            )
        return terms


@dataclass(frozen=True)
class Disjunction:
    operands: tuple["EventExpr", ...]

    def holds_scores(self, prefix: Sequence[int], suffix: Sequence[int]) -> bool:
        return any(operand.holds_scores(prefix, suffix) for operand in self.operands)

    def describe(self) -> str:
        return "|".join(operand.describe() for operand in self.operands)

    def dnf(self) -> frozenset[frozenset[AtomicEvent]]:
        return frozenset().union(*(operand.dnf() for operand in self.operands))


EventExpr = Union[AtomicEvent, Conjunction, Disjunction]


def P(i: int, j: int) -> AtomicEvent:
    return AtomicEvent(EventKind.PREFIX_MAX, i, j)


def S(i: int, j: int) -> AtomicEvent:
    return AtomicEvent(EventKind.SUFFIX_MAX, i, j)


def both(*operands: EventExpr) -> Conjunction:
    return Conjunction(tuple(operands))


def either(*operands: EventExpr) -> Disjunction:
    return Disjunction(tuple(operands))


# Canonical intersections counted in closed form.
P01_S23 = both(P(0, 1), S(2, 3))
P01_S01 = both(P(0, 1), S(0, 1))
P01_P23_S01 = both(P(0, 1), P(2, 3), S(0, 1))
P01_P23_S01_S23 = both(P(0, 1), P(2, 3), S(0, 1), S(2, 3))

# The other three triple intersections; all four share one count.
P23_S01_S23 = both(P(2, 3), S(0, 1), S(2, 3))
P01_S01_S23 = both(P(0, 1), S(0, 1), S(2, 3))
P01_P23_S23 = both(P(0, 1), P(2, 3), S(2, 3))
TRIPLE_INTERSECTIONS: tuple[Conjunction, ...] = (
    P01_P23_S01,
    P23_S01_S23,
    P01_S01_S23,
    P01_P23_S23,
)

EVENT_A = both(either(P(0, 1), P(2, 3)), either(S(0, 1), S(2, 3)))
EVENT_B = both(either(P(0, 2), P(1, 3)), either(S(0, 2), S(1, 3)))
EVENT_C = both(either(P(0, 3), P(1, 2)), either(S(0, 3), S(1, 2)))
EVENT_ABC = either(EVENT_A, EVENT_B, EVENT_C)


######################################################################
# Evaluation
######################################################################


def _scores(values: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    return prefix_scores(values, n), suffix_scores(values, n)


def atomic_holds(event: AtomicEvent, q: Quartet) -> bool:
    return event.holds_scores(*_scores(q.bits, q.width))


def eval_event(expr: EventExpr, q: Quartet) -> bool:
    return expr.holds_scores(*_scores(q.bits, q.width))


class OrbitCounts(NamedTuple):
    a: int
    b: int
    c: int


_PERMUTATIONS: tuple[tuple[int, ...], ...] = tuple(itertools.permutations(range(4)))


def orbit_classify(q: Quartet) -> OrbitCounts:
    """Count how many of the 24 reorderings of ``q`` land in A, B and C."""
    counts = [0, 0, 0]
    for perm in _PERMUTATIONS:
        values = [q.bits[index] for index in perm]
        prefix, suffix = _scores(values, q.width)
        for slot, event in enumerate((EVENT_A, EVENT_B, EVENT_C)):
            if event.holds_scores(prefix, suffix):
                counts[slot] += 1
    return OrbitCounts(*counts)


######################################################################
# Enumeration kernels
######################################################################

Stratum = Optional[tuple[int, int]]


def _check_range(n: int, cap: int, what: str) -> None:
    if not (MIN_WIDTH <= n <= cap):
        raise EnumerationRangeError(
            f"{what} supports {MIN_WIDTH} <= n <= {cap}, got n={n}."
        )

def _stratum_key(
    prefix: Sequence[int],
    suffix: Sequence[int],
    strata: Optional[tuple[int, int]],
) -> Stratum:
    if strata is None:
        return None
    return prefix[strata[0]], suffix[strata[1]]


def _restricted_chunk(
    expr: EventExpr,
    n: int,
    x1: int,
    strata: Optional[tuple[int, int]],
) -> Counter:
    counts: Counter = Counter()
    limit = 1 << n
    for x2 in range(1, limit):
        if x2 == x1:
            continue
        for x3 in range(1, limit):
            if x3 == x1 or x3 == x2:
                continue
            values = (0, x1, x2, x3)
            prefix, suffix = _scores(values, n)
            if expr.holds_scores(prefix, suffix):
                counts[_stratum_key(prefix, suffix, strata)] += 1
    return counts


def _full_chunk(expr: EventExpr, n: int, x0: int) -> Counter:
    counts: Counter = Counter()
    limit = 1 << n
    for x1, x2, x3 in itertools.permutations(range(limit), 3):
        if x0 in (x1, x2, x3):
            continue
        if expr.holds_scores(*_scores((x0, x1, x2, x3), n)):
            counts[None] += 1
    return counts


def _unordered_chunk(n: int, smallest: int) -> Counter:
    counts: Counter = Counter()
    limit = 1 << n
    for rest in itertools.combinations(range(smallest + 1, limit), 3):
        if agree_bits((smallest, *rest), n):
            counts[None] += 1
    return counts


def _restricted_counter(
    expr: EventExpr,
    n: int,
    config: EnumerationConfig,
    strata: Optional[tuple[int, int]] = None,
) -> Counter:
    _check_range(n, config.restricted_cap, "Restricted enumeration")
    arguments = [(expr, n, x1, strata) for x1 in range(1, 1 << n)]
    LOGGER.debug(
        "Enumerating %s with x0=0^%d over %d chunks", expr.describe(), n, len(arguments)
    )
    return run_chunks(_restricted_chunk, arguments, config.workers)


def count_restricted(
    expr: EventExpr, n: int, *, config: EnumerationConfig = DEFAULT_CONFIG
) -> int:
    """Count ordered tuples ``(0^n, x1, x2, x3)`` of distinct labels satisfying ``expr``."""
    return sum(_restricted_counter(expr, n, config).values())


def count_stratified(
    expr: EventExpr,
    n: int,
    *,
    prefix_pair: tuple[int, int] = (0, 1),
    suffix_pair: tuple[int, int] = (2, 3),
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> dict[tuple[int, int], int]:
    """Restricted count of ``expr`` binned by ``(lcp of prefix_pair, lcs of suffix_pair)``."""
    strata = (PAIR_ORDER.index(tuple(prefix_pair)), PAIR_ORDER.index(tuple(suffix_pair)))
    counter = _restricted_counter(expr, n, config, strata)
    return {key: value for key, value in sorted(counter.items())}


def count_full(
    expr: EventExpr,
    n: int,
    *,
    direct: bool = False,
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> int:
    """Count all ordered 4-tuples of distinct labels satisfying ``expr``.

    By default this is ``2^n`` times :func:`count_restricted`; ``direct=True``
    enumerates every tuple instead and is limited to ``config.full_direct_cap``.
    """
    if not direct:
        return (1 << n) * count_restricted(expr, n, config=config)
    _check_range(n, config.full_direct_cap, "Direct full enumeration")
    arguments = [(expr, n, x0) for x0 in range(1 << n)]
    return sum(run_chunks(_full_chunk, arguments, config.workers).values())


def count_agreeing_unordered(n: int, *, config: EnumerationConfig = DEFAULT_CONFIG) -> int:
    """Number of 4-subsets of ``{0,1}^n`` on which both trees induce the same split."""
    _check_range(n, config.effective_unordered_cap(), "Unordered agreement scan")
    arguments = [(n, smallest) for smallest in range((1 << n) - 3)]
    LOGGER.debug("Scanning 4-subsets for n=%d over %d chunks", n, len(arguments))
    return sum(run_chunks(_unordered_chunk, arguments, config.workers).values())


######################################################################
# Reports
######################################################################


class CountMethod(str, Enum):
    BRUTE_RESTRICTED = "brute_restricted"
    BRUTE_FULL = "brute_full"
    SUMMATION = "summation"
    CLOSED_FORM = "closed_form"


class CountReport(BaseModel):
    """Outcome of counting one event expression with one method."""

    n: int
    expr: str
    method: CountMethod
    value: int = Field(ge=0)


__all__ = [
    "AtomicEvent",
    "Conjunction",
    "CountMethod",
    "CountReport",
    "Disjunction",
    "EVENT_A",
    "EVENT_ABC",
    "EVENT_B",
    "EVENT_C",
    "EventExpr",
    "EventKind",
    "OrbitCounts",
    "P",
    "P01_P23_S01",
    "P01_P23_S01_S23",
    "P01_P23_S23",
    "P01_S01",
    "P01_S01_S23",
    "P01_S23",
    "P23_S01_S23",
    "S",
    "TRIPLE_INTERSECTIONS",
    "atomic_holds",
    "both",
    "count_agreeing_unordered",
    "count_full",
    "count_restricted",
    "count_stratified",
    "either",
    "eval_event",
    "orbit_classify",
]
