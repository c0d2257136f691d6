"""Exception hierarchy shared by the quartx core modules."""

from __future__ import annotations


class QuartxError(ValueError):
    """Base exception for invalid input to any quartx operation."""


class LabelError(QuartxError):
    """Raised for malformed bit labels or labels of mismatched widths."""


class TopologyError(QuartxError):
    """Raised when four labels do not form a valid quartet."""


class TopologyTieError(TopologyError, RuntimeError):
    """Raised when two different pairings reach the same maximal score.

    Valid quartets never trigger this; seeing it means a scoring bug.
    """


class EnumerationRangeError(QuartxError):
    """Raised when ``n`` lies outside the range an enumeration supports."""


class UnsupportedEventError(QuartxError):
    """Raised when an event expression has no closed form or summation."""


class RegionError(QuartxError):
    """Raised when ``(l, k)`` lies outside the region of the requested case."""


class TranscriptionError(QuartxError):
    """Raised when a closed-form polynomial evaluates to a non-integer."""


class TreeError(QuartxError):
    """Raised for structurally invalid trees or incompatible tree pairs."""


class ConfigError(QuartxError):
    """Raised when configuration values (e.g. environment overrides) are invalid."""


__all__ = [
    "ConfigError",
    "EnumerationRangeError",
    "LabelError",
    "QuartxError",
    "RegionError",
    "TopologyError",
    "TopologyTieError",
    "TranscriptionError",
    "TreeError",
    "UnsupportedEventError",
]
