"""Exact counting formulas for the prefix/suffix tree pair.

Every count is evaluated three ways:

* ``term_count``: the number of tuples with ``x0 = 0^n`` for one stratum
  ``(l, k)`` of one case (``l`` is the common prefix length of ``x0, x1``;
  ``k`` the common suffix length of ``x2, x3`` for P01S23 and of ``x0, x1``
  otherwise);
* ``sum_form``: the finite sum of those terms over the case region;
* ``closed_form``: the polynomial in ``(n, 2^n)`` with rational coefficients
  held in :data:`POLYNOMIALS`.

All arithmetic uses :class:`fractions.Fraction`; a polynomial that should
count something but evaluates to a non-integer raises
:class:`TranscriptionError`. Floating point appears only in
:func:`derivative_value` / :func:`derivative_scaled`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .bitlabel import MIN_WIDTH
from .errors import EnumerationRangeError, RegionError, TranscriptionError, UnsupportedEventError
from . import events


class ClosedFormEvent(str, Enum):
    P01S23 = "P01S23"
    P01S01 = "P01S01"
    P01P23S01 = "P01P23S01"
    ALL4 = "ALL4"


class CaseId(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    TOTAL = "total"


CASES_BY_EVENT: dict[ClosedFormEvent, tuple[CaseId, ...]] = {
    ClosedFormEvent.P01S23: (CaseId.CASE1, CaseId.CASE2, CaseId.CASE3),
    ClosedFormEvent.P01S01: (CaseId.CASE1, CaseId.CASE2),
    ClosedFormEvent.P01P23S01: (CaseId.CASE1, CaseId.CASE2),
    ClosedFormEvent.ALL4: (CaseId.CASE1, CaseId.CASE2),
}

EVENT_EXPRESSIONS: dict[ClosedFormEvent, events.EventExpr] = {
    ClosedFormEvent.P01S23: events.P01_S23,
    ClosedFormEvent.P01S01: events.P01_S01,
    ClosedFormEvent.P01P23S01: events.P01_P23_S01,
    ClosedFormEvent.ALL4: events.P01_P23_S01_S23,
}

# Index pairs defining (l, k): l from the first pair's prefix, k from the second's suffix.
STRATA_PAIRS: dict[ClosedFormEvent, tuple[tuple[int, int], tuple[int, int]]] = {
    ClosedFormEvent.P01S23: ((0, 1), (2, 3)),
    ClosedFormEvent.P01S01: ((0, 1), (0, 1)),
    ClosedFormEvent.P01P23S01: ((0, 1), (0, 1)),
    ClosedFormEvent.ALL4: ((0, 1), (0, 1)),
}


@dataclass(frozen=True)
class EventCaseId:
    event: ClosedFormEvent
    case: CaseId

    def __post_init__(self) -> None:
        if self.case is not CaseId.TOTAL and self.case not in CASES_BY_EVENT[self.event]:
            raise RegionError(f"{self.event.value} has no {self.case.value}.")

    @property
    def key(self) -> str:
        return f"{self.event.value}/{self.case.value}"


######################################################################
# Polynomials
######################################################################


@dataclass(frozen=True)
class Polynomial:
    """``sum(c * n**a * 2**(b*n)) / divisor`` over ``terms = ((c, a, b), ...)``."""

    terms: tuple[tuple[Fraction, int, int], ...]
    divisor: int = 1

    def evaluate(self, n: int) -> Fraction:
        total = sum(
            (coefficient * n**n_power * 2 ** (two_power * n)
             for coefficient, n_power, two_power in self.terms),
            Fraction(0),
        )
        return total / self.divisor

    def integer_at(self, n: int, *, name: str = "polynomial") -> int:
        value = self.evaluate(n)
        if value.denominator != 1:
            raise TranscriptionError(f"{name} evaluates to non-integer {value} at n={n}.")
        return value.numerator


def _poly(*terms: tuple[str, int, int], divisor: int = 1) -> Polynomial:
    return Polynomial(
        tuple((Fraction(coefficient), n_power, two_power) for coefficient, n_power, two_power in terms),
        divisor,
    )


# (coefficient, power of n, k) stands for coefficient * n^power * 2^(k*n).
POLYNOMIALS: dict[str, Polynomial] = {
    "P01S23/case1": _poly(
        ("16/441", 0, 3), ("-1", 1, 2), ("5", 0, 2), ("-25/3", 1, 1),
        ("95/9", 0, 1), ("-36/7", 1, 0), ("-764/49", 0, 0),
    ),
    "P01S23/case2": _poly(
        ("1/2", 1, 2), ("-8/3", 0, 2), ("4", 1, 1), ("-4", 0, 1),
        ("2", 1, 0), ("20/3", 0, 0),
    ),
    "P01S23/case3": _poly(
        ("1/2", 1, 2), ("-7/3", 0, 2), ("2", 1, 1), ("1", 0, 1), ("4/3", 0, 0),
    ),
    "P01S23/total": _poly(
        ("16/441", 0, 3), ("-7/3", 1, 1), ("68/9", 0, 1), ("-22/7", 1, 0),
        ("-372/49", 0, 0),
    ),
    "P01S01/case1": _poly(
        ("5", 0, 2), ("-764/49", 0, 0), ("95/9", 0, 1), ("-25/3", 1, 1),
        ("-1", 1, 2), ("-36/7", 1, 0), ("16/441", 0, 3),
    ),
    "P01S01/case2": _poly(
        ("28", 0, 0), ("10", 1, 0), ("-22", 0, 1), ("-6", 0, 2), ("1", 1, 2),
        ("13", 1, 1),
    ),
    "P01S01/total": _poly(
        ("16/441", 0, 3), ("-1", 0, 2), ("14/3", 1, 1), ("-103/9", 0, 1),
        ("34/7", 1, 0), ("608/49", 0, 0),
    ),
    "P01P23S01/case1": _poly(
        ("4/441", 0, 3), ("-1/3", 0, 2), ("5/3", 1, 1), ("-37/9", 0, 1),
        ("12/7", 1, 0), ("652/147", 0, 0),
    ),
    "P01P23S01/case2": _poly(
        ("1/3", 0, 2), ("-2", 1, 1), ("5", 0, 1), ("-2", 1, 0), ("-16/3", 0, 0),
    ),
    "P01P23S01/total": _poly(
        ("4/441", 0, 3), ("-1/3", 1, 1), ("8/9", 0, 1), ("-2/7", 1, 0),
        ("-44/49", 0, 0),
    ),
    "ALL4/case1": _poly(
        ("1/441", 0, 3), ("-1/3", 1, 1), ("11/9", 0, 1), ("-4/7", 1, 0),
        ("-60/49", 0, 0),
    ),
    "ALL4/case2": _poly(
        ("1", 1, 1), ("-4", 0, 1), ("2", 1, 0), ("4", 0, 0),
    ),
    "ALL4/total": _poly(
        ("1/441", 0, 3), ("2/3", 1, 1), ("-25/9", 0, 1), ("10/7", 1, 0),
        ("136/49", 0, 0),
    ),
    "A/restricted": _poly(
        ("1/9", 0, 3), ("-2", 0, 2), ("20/3", 1, 1), ("-127/9", 0, 1),
        ("6", 1, 0), ("16", 0, 0),
    ),
    "A/full": _poly(
        ("1/9", 0, 4), ("-2", 0, 3), ("20/3", 1, 2), ("-127/9", 0, 2),
        ("6", 1, 1), ("16", 0, 1),
    ),
    "ABC/full": _poly(
        ("1/3", 0, 4), ("-6", 0, 3), ("20", 1, 2), ("-127/3", 0, 2),
        ("18", 1, 1), ("48", 0, 1),
    ),
    "agreement/unordered": _poly(
        ("1/3", 0, 4), ("-6", 0, 3), ("20", 1, 2), ("-127/3", 0, 2),
        ("18", 1, 1), ("48", 0, 1),
        divisor=24,
    ),
    "total/unordered": _poly(
        ("1", 0, 4), ("-6", 0, 3), ("11", 0, 2), ("-6", 0, 1),
        divisor=24,
    ),
    "distance/unordered": _poly(
        ("2/3", 0, 4), ("-20", 1, 2), ("160/3", 0, 2), ("-18", 1, 1), ("-54", 0, 1),
        divisor=24,
    ),
    "ratio/numerator": _poly(
        ("2/3", 0, 4), ("-20", 1, 2), ("160/3", 0, 2), ("-18", 1, 1), ("-54", 0, 1),
    ),
    "ratio/denominator": _poly(
        ("1", 0, 4), ("-6", 0, 3), ("11", 0, 2), ("-6", 0, 1),
    ),
}


def _check_n(n: int) -> None:
    if n < MIN_WIDTH:
        raise EnumerationRangeError(f"Formulas are defined for n >= {MIN_WIDTH}, got n={n}.")


def _evaluate(name: str, n: int) -> int:
    _check_n(n)
    return POLYNOMIALS[name].integer_at(n, name=name)


######################################################################
# Per-stratum terms
######################################################################


def _p2(exponent: int) -> int:
    return 1 << exponent


def _in_region(case: CaseId, n: int, l: int, k: int) -> bool:
    if l < 1 or k < 1:
        return False
    if case is CaseId.CASE1:
        return l + k + 2 <= n
    if case is CaseId.CASE2:
        return l + k + 1 == n
    if case is CaseId.CASE3:
        return l + k >= n and l <= n - 1 and k <= n - 1
    return False


def region(case: CaseId, n: int) -> Iterator[tuple[int, int]]:
    """Yield the ``(l, k)`` strata of ``case`` in lexicographic order."""
    for l in range(1, n):
        for k in range(1, n):
            if _in_region(case, n, l, k):
                yield l, k


def case_of(event: ClosedFormEvent, n: int, l: int, k: int) -> Optional[CaseId]:
    """Return the case whose region holds ``(l, k)``, or ``None``."""
    for case in CASES_BY_EVENT[event]:
        if _in_region(case, n, l, k):
            return case
    return None


def _p01s23_term(case: CaseId, n: int, l: int, k: int) -> int:
    if case is CaseId.CASE1:
        prefixes = _p2(2 * l + 2) - 5 * _p2(l + 1) + 6
        suffixes = _p2(2 * k + 2) - 5 * _p2(k + 1) + 6
        return _p2(3 * n - 3 * l - 3 * k - 6) * prefixes * suffixes
    if case is CaseId.CASE2:
        return 2 * (_p2(k) - 1) ** 2 * (_p2(l) - 1) ** 2
    zero_overlap = (
        2 * _p2(n - l - 1) * (_p2(n - l) - 2) * (_p2(n - k - 1) - 1) * _p2(n - k - 1)
    )
    nonzero_overlap = (
        2 * (_p2(k + l - n) - 1) * _p2(n - l - 1) * _p2(n - l)
        * _p2(n - k - 1) * _p2(n - k - 1)
    )
    return zero_overlap + nonzero_overlap


def _p01s01_term(case: CaseId, n: int, l: int, k: int) -> int:
    if case is CaseId.CASE1:
        return (
            _p2(3 * (n - k - l - 2))
            * (_p2(l + 1) - 2) * (_p2(l + 1) - 3)
            * (_p2(k + 1) - 2) * (_p2(k + 1) - 3)
        )
    shorter_suffix = (_p2(l + 1) - 2) * (_p2(l + 1) - 3) * (_p2(k) - 1) * (_p2(k) - 2)
    equal_suffix = (_p2(l) - 1) ** 2 * (_p2(k + 1) - 2)
    return shorter_suffix + equal_suffix


def _p01p23s01_term(case: CaseId, n: int, l: int, k: int) -> int:
    if case is CaseId.CASE1:
        return _p2(3 * (n - k - l - 2)) * (_p2(l + 1) - 2) * (_p2(k + 1) - 2) * (_p2(k + 1) - 3)
    return (_p2(l + 1) - 2) * (_p2(k) - 1) ** 2


def _all4_term(case: CaseId, n: int, l: int, k: int) -> int:
    if case is CaseId.CASE1:
        return _p2(3 * (n - k - l - 2)) * (_p2(l + 1) - 2) * (_p2(k + 1) - 2)
    return (_p2(l + 1) - 2) * (_p2(k) - 1)


_TERMS: dict[ClosedFormEvent, Callable[[CaseId, int, int, int], int]] = {
    ClosedFormEvent.P01S23: _p01s23_term,
    ClosedFormEvent.P01S01: _p01s01_term,
    ClosedFormEvent.P01P23S01: _p01p23s01_term,
    ClosedFormEvent.ALL4: _all4_term,
}


def term_count(case_id: EventCaseId, n: int, l: int, k: int) -> int:
    """Number of tuples with ``x0 = 0^n`` in stratum ``(l, k)`` of ``case_id``."""
    _check_n(n)
    if case_id.case is CaseId.TOTAL:
        raise RegionError("term_count needs a single case, not the total.")
    if not _in_region(case_id.case, n, l, k):
        raise RegionError(f"(l={l}, k={k}) is outside {case_id.key} for n={n}.")
    return _TERMS[case_id.event](case_id.case, n, l, k)


def sum_form(case_id: EventCaseId, n: int) -> int:
    """Sum of :func:`term_count` over the case region (0 when empty)."""
    _check_n(n)
    if case_id.case is CaseId.TOTAL:
        return sum(
            sum_form(EventCaseId(case_id.event, case), n)
            for case in CASES_BY_EVENT[case_id.event]
        )
    term = _TERMS[case_id.event]
    return sum(term(case_id.case, n, l, k) for l, k in region(case_id.case, n))


def closed_form(case_id: EventCaseId, n: int) -> int:
    return _evaluate(case_id.key, n)


######################################################################
# Combining the events
######################################################################


def _total(event: ClosedFormEvent) -> EventCaseId:
    return EventCaseId(event, CaseId.TOTAL)


def cf_A_restricted(n: int) -> int:
    return _evaluate("A/restricted", n)


def cf_A_full(n: int) -> int:
    return _evaluate("A/full", n)


def cf_ABC(n: int) -> int:
    return _evaluate("ABC/full", n)


def _inclusion_exclusion(n: int, count: Callable[[EventCaseId, int], int]) -> int:
    return (
        2 * count(_total(ClosedFormEvent.P01S01), n)
        + 2 * count(_total(ClosedFormEvent.P01S23), n)
        - 4 * count(_total(ClosedFormEvent.P01P23S01), n)
        + count(_total(ClosedFormEvent.ALL4), n)
    )


def inclusion_exclusion_A(n: int) -> int:
    """|A| with ``x0 = 0^n`` assembled from the four closed forms."""
    return _inclusion_exclusion(n, closed_form)


def inclusion_exclusion_A_sum(n: int) -> int:
    """Same combination as :func:`inclusion_exclusion_A` over the summation forms."""
    return _inclusion_exclusion(n, sum_form)


def agreeing_unordered_cf(n: int) -> int:
    return _evaluate("agreement/unordered", n)


def total_unordered(n: int) -> int:
    return _evaluate("total/unordered", n)


def distance_cf(n: int) -> int:
    return _evaluate("distance/unordered", n)


def ratio_numerator(n: int) -> int:
    return _evaluate("ratio/numerator", n)


def ratio_denominator(n: int) -> int:
    return _evaluate("ratio/denominator", n)


def ratio(n: int) -> Fraction:
    """Normalised quartet distance ``distance / C(2^n, 4)``."""
    return Fraction(distance_cf(n), total_unordered(n))


def monotone_crossdiff(n: int) -> int:
    """``num(n) * den(n+1) - num(n+1) * den(n)``; positive iff ``R(n) > R(n+1)``."""
    return ratio_numerator(n) * ratio_denominator(n + 1) - ratio_numerator(
        n + 1
    ) * ratio_denominator(n)


######################################################################
# Derivative of the cross difference
######################################################################

# (coefficient, power of t, k, uses ln 2) for coefficient * t^power * 2^(k*t) [* ln 2].
DERIVATIVE_TERMS: tuple[tuple[int, int, int, bool], ...] = (
    (-3792, 0, 4, True),
    (1440, 1, 4, True),
    (360, 0, 4, False),
    (-240, 0, 5, True),
    (-342, 0, 3, False),
    (-1026, 1, 3, True),
    (10908, 0, 3, True),
    (-1944, 1, 2, True),
    (-972, 0, 2, False),
    (-7824, 0, 2, True),
    (954, 1, 1, True),
    (954, 0, 1, False),
    (948, 0, 1, True),
)
_LEADING_POWER = max(two_power for _, _, two_power, _ in DERIVATIVE_TERMS)


def derivative_scaled(t: float) -> float:
    """Derivative of the cross difference divided by ``2^(5t)``; finite for every ``t``."""
    ln2 = math.log(2)
    return math.fsum(
        coefficient
        * t**t_power
        * (ln2 if with_log else 1.0)
        * 2.0 ** ((two_power - _LEADING_POWER) * t)
        for coefficient, t_power, two_power, with_log in DERIVATIVE_TERMS
    )


def derivative_value(t: float) -> float:
    """Derivative of the cross difference at real ``t``; saturates to +-inf."""
    scaled = derivative_scaled(t)
    try:
        return scaled * 2.0 ** (_LEADING_POWER * t)
    except OverflowError:
        return math.copysign(math.inf, scaled)


######################################################################
# Rendering
######################################################################


class Rounding(str, Enum):
    DOWN = "down"
    HALF_UP = "half-up"


def render_decimal(value: Fraction, places: int = 3, rounding: Rounding = Rounding.DOWN) -> str:
    """Render ``value`` with ``places`` decimals using exact integer rounding."""
    scaled = Fraction(value) * 10**places
    if Rounding(rounding) is Rounding.DOWN:
        units = math.trunc(scaled)
    elif scaled >= 0:
        units = math.floor(scaled + Fraction(1, 2))
    else:
        units = -math.floor(-scaled + Fraction(1, 2))
    return str(Decimal(units).scaleb(-places))


######################################################################
# Expression lookup
######################################################################


def _canonical_counts() -> list[tuple[events.EventExpr, Callable[[int], int], Callable[[int], int]]]:
    """(expression, closed form, summation form) for every supported expression."""
    entries: list[tuple[events.EventExpr, Callable[[int], int], Callable[[int], int]]] = []
    for event, expr in EVENT_EXPRESSIONS.items():
        total = _total(event)
        entries.append(
            (expr, lambda n, total=total: closed_form(total, n), lambda n, total=total: sum_form(total, n))
        )
    triple = _total(ClosedFormEvent.P01P23S01)
    for expr in events.TRIPLE_INTERSECTIONS[1:]:
        entries.append(
            (expr, lambda n: closed_form(triple, n), lambda n: sum_form(triple, n))
        )
    entries.append((events.EVENT_A, cf_A_restricted, inclusion_exclusion_A_sum))
    entries.append(
        (
            events.EVENT_ABC,
            lambda n: _exact_div(cf_ABC(n), 1 << n, "ABC/full"),
            lambda n: 3 * inclusion_exclusion_A_sum(n),
        )
    )
    return entries


def _exact_div(value: int, divisor: int, name: str) -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise TranscriptionError(f"{name} value {value} is not divisible by {divisor}.")
    return quotient


def formula_count(expr: events.EventExpr, n: int, *, summation: bool = False) -> int:
    """Restricted (``x0 = 0^n``) count of ``expr`` from the formulas.

    Only the canonical intersections, the triple intersections, A and
    A|B|C are supported; matching is by disjunctive normal form.

    Raises
    ------
    UnsupportedEventError
        When ``expr`` has no formula.
    """
    target = expr.dnf()
    for candidate, closed, summed in _canonical_counts():
        if candidate.dnf() == target:
            return summed(n) if summation else closed(n)
    raise UnsupportedEventError(
        f"No closed form or summation is known for {expr.describe()}."
    )


__all__ = [
    "CASES_BY_EVENT",
    "CaseId",
    "ClosedFormEvent",
    "DERIVATIVE_TERMS",
    "EVENT_EXPRESSIONS",
    "EventCaseId",
    "POLYNOMIALS",
    "Polynomial",
    "Rounding",
    "STRATA_PAIRS",
    "agreeing_unordered_cf",
    "case_of",
    "cf_ABC",
    "cf_A_full",
    "cf_A_restricted",
    "closed_form",
    "derivative_scaled",
    "derivative_value",
    "distance_cf",
    "formula_count",
    "inclusion_exclusion_A",
    "inclusion_exclusion_A_sum",
    "monotone_crossdiff",
    "ratio",
    "ratio_denominator",
    "ratio_numerator",
    "region",
    "render_decimal",
    "sum_form",
    "term_count",
    "total_unordered",
]
