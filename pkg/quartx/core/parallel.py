"""Chunked evaluation with an optional process pool.

Partial results are merged in chunk order, so totals do not depend on how
many workers ran them.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
from collections import Counter
from typing import Callable, Iterable, Sequence

from quartx.app.logging import get_logger

LOGGER = get_logger(__name__)


def run_chunks(
    func: Callable[..., Counter],
    arguments: Sequence[tuple],
    workers: int,
) -> Counter:
    """Evaluate ``func`` over ``arguments`` and merge the partial counters in order."""
    if workers <= 1 or len(arguments) <= 1:
        partials: Iterable[Counter] = itertools.starmap(func, arguments)
    else:
        processes = min(workers, len(arguments))
        LOGGER.debug("Dispatching %d chunks to %d processes", len(arguments), processes)
        with mp.Pool(processes) as pool:
            partials = pool.starmap(func, arguments)
    total: Counter = Counter()
    for partial in partials:
        total.update(partial)
    return total


__all__ = ["run_chunks"]
