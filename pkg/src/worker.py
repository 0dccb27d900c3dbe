"""
worker.py
=========

Goal
====

Run independent evaluations (one per sample assignment) on a thread pool while
keeping every result tied to its position in the sampling plan. Verdicts are
defined by plan order, so the pool must never let completion order leak into
results.

Usage example
=============

.. code-block:: python

    import param
    from worker import Worker

    param.worker = Worker(threads=4)
    values = param.worker.map(lambda assignment: evaluate(p, assignment), plan)
    hit = param.worker.first_failure(evaluate_one, plan, is_nonzero)

"""

import concurrent.futures
import itertools
from typing import Callable, Iterable, List, Optional, Tuple

from loguru import logger

import param


# =============================================================================
class Worker:
    """Ordered thread pool"""

    def __init__(self, threads: Optional[int] = None, chunk: int = 64):
        self.threads = max(1, threads if threads is not None else param.threads)
        self.chunk = chunk

    # -------------------------------------------------------------------------
    def map(self, func: Callable, items: Iterable) -> List:
        """Apply func to every item, results in input order."""
        if self.threads == 1:
            return [func(item) for item in items]
        with concurrent.futures.ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(func, items))

    # -------------------------------------------------------------------------
    def first_failure(
        self, func: Callable, items: Iterable, failed: Callable
    ) -> Tuple[int, Optional[Tuple]]:
        """Evaluate items chunk by chunk and stop at the first failure.

        :param func: evaluation applied to each item
        :param items: plan-ordered items (may be a generator)
        :param failed: predicate on a result telling whether it is a failure
        :returns: (number of items evaluated, (index, item, result) or None).
            The hit is the plan-order-first failure even when later items of
            the same chunk finished earlier.
        """
        iterator = iter(items)
        done = 0
        while True:
            batch = list(itertools.islice(iterator, self.chunk * self.threads))
            if not batch:
                return done, None
            results = self.map(func, batch)
            for offset, (item, result) in enumerate(zip(batch, results)):
                if failed(result):
                    logger.debug(f"failure at plan index {done + offset}")
                    return done + offset + 1, (done + offset, item, result)
            done += len(batch)
