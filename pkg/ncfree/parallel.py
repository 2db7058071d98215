"""Order-preserving work distribution for coefficient-level parallelism.

Results come back in input order whatever the job count, so output is
byte-identical between serial and parallel runs. Worker functions must be
module-level so they pickle.
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], parts: int) -> List[List[T]]:
    """Split items into at most `parts` contiguous, non-empty chunks."""
    items = list(items)
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks = []
    start = 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return [c for c in chunks if c]


def ordered_map(func: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """Map func over items, using a process pool when jobs > 1."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]
    workers = min(jobs, len(items))
    logger.debug("dispatching %d tasks to %d worker processes", len(items), workers)
    with Pool(workers) as pool:
        return pool.map(func, items)
