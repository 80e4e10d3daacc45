"""Order-preserving process-pool helpers for the --jobs option."""

import multiprocessing
from typing import Callable, List, Sequence, TypeVar

from shared.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_chunks(items: Sequence[T], parts: int) -> List[List[T]]:
    """Split items into at most `parts` contiguous chunks of near-equal size."""
    parts = max(1, min(parts, len(items)))
    size = max(1, -(-len(items) // parts))
    return [list(items[i : i + size]) for i in range(0, len(items), size)]


def run_chunks(worker: Callable[[T], R], payloads: List[T], jobs: int) -> List[R]:
    """
    Apply a top-level worker to every payload.

    Runs in-process for jobs <= 1, otherwise in a multiprocessing.Pool.
    Results always come back in payload order, so reductions over them
    are identical for every jobs value.
    """
    if jobs <= 1 or len(payloads) <= 1:
        return [worker(payload) for payload in payloads]
    logger.debug(f"Dispatching {len(payloads)} chunks to {jobs} workers")
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(worker, payloads)
