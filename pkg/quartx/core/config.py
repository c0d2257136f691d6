"""Enumeration limits and worker settings.

The brute-force paths grow like ``2^(3n)`` (ordered tuples) or ``2^(4n)``
(full enumeration, 4-subsets), so every counting entry point checks ``n``
against the caps held here before starting.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Mapping

from .errors import ConfigError

WORKERS_ENV = "QUARTX_WORKERS"
ALLOW_LARGE_ENV = "QUARTX_ALLOW_LARGE"

_TRUTHY = {"1", "true", "yes", "on"}
_FALSY = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class EnumerationConfig:
    """Caps and parallelism for the enumeration kernels.

    Parameters
    ----------
    restricted_cap:
        Largest ``n`` for enumerating tuples with ``x0`` fixed to ``0^n``.
    full_direct_cap:
        Largest ``n`` for enumerating every ordered 4-tuple directly.
    unordered_cap:
        Largest ``n`` for the 4-subset agreement scan by default.
    unordered_opt_in_cap:
        Largest ``n`` for the 4-subset scan when ``allow_large`` is set.
    tree_distance_cap:
        Largest leaf count accepted by the brute-force quartet distance.
    build_tree_cap:
        Largest ``n`` for materialising the complete trees.
    workers:
        Number of worker processes; ``1`` runs everything in-process.
    allow_large:
        Opt in to the larger unordered scan.
    """

    restricted_cap: int = 8
    full_direct_cap: int = 4
    unordered_cap: int = 7
    unordered_opt_in_cap: int = 8
    tree_distance_cap: int = 256
    build_tree_cap: int = 20
    workers: int = 1
    allow_large: bool = False

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}.")

    def effective_unordered_cap(self) -> int:
        return self.unordered_opt_in_cap if self.allow_large else self.unordered_cap

    def with_workers(self, workers: int) -> "EnumerationConfig":
        return replace(self, workers=workers)

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "EnumerationConfig":
        """Build a config honouring ``QUARTX_WORKERS`` and ``QUARTX_ALLOW_LARGE``."""
        env = os.environ if environ is None else environ
        workers_raw = env.get(WORKERS_ENV, "1").strip() or "1"
        try:
            workers = int(workers_raw)
        except ValueError as exc:
            raise ConfigError(f"{WORKERS_ENV} must be an integer, got {workers_raw!r}.") from exc

        allow_raw = env.get(ALLOW_LARGE_ENV, "").strip().lower()
        if allow_raw in _TRUTHY:
            allow_large = True
        elif allow_raw in _FALSY:
            allow_large = False
        else:
            raise ConfigError(f"{ALLOW_LARGE_ENV} must be a boolean flag, got {allow_raw!r}.")
        return cls(workers=workers, allow_large=allow_large)


DEFAULT_CONFIG = EnumerationConfig()

__all__ = [
    "ALLOW_LARGE_ENV",
    "DEFAULT_CONFIG",
    "EnumerationConfig",
    "WORKERS_ENV",
]
