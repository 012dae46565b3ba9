"""
Parallel sweep runner with bounded concurrency
"""

import asyncio
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from ..config.settings import get_settings
from ..config.structured_logger import get_structured_logger

C = TypeVar("C")
R = TypeVar("R")
A = TypeVar("A")


def chunked(items: Sequence[C], size: int) -> List[Sequence[C]]:
    """Split a sequence into consecutive chunks of at most `size` items"""
    size = max(1, size)
    return [items[i:i + size] for i in range(0, len(items), size)]


class SweepRunner:
    """
    Runs a pure function over chunks of work and folds the partial results.

    Chunks are submitted to a process pool with at most `max_workers` in
    flight; partial results are merged in chunk order, so the outcome does
    not depend on scheduling. With a single worker everything runs inline.
    """

    def __init__(self, max_workers: Optional[int] = None, name: str = "sweep"):
        """
        Initialize the runner

        Args:
            max_workers: Maximum number of concurrent worker processes
                (defaults to TEICHCOUNT_THREADS)
            name: Sweep name used in log events
        """
        self.max_workers = max_workers if max_workers is not None else get_settings().threads
        self.name = name
        self.logger = logging.getLogger(__name__)
        self.events = get_structured_logger("teichcount.workers")

    def run(
        self,
        func: Callable[[C], R],
        chunks: Sequence[C],
        merge: Callable[[A, R], A],
        initial: A,
    ) -> A:
        """
        Evaluate `func` on every chunk and fold the results with `merge`

        Args:
            func: Picklable module-level function applied to each chunk
            chunks: Work items
            merge: Fold function (accumulator, partial) -> accumulator
            initial: Initial accumulator

        Returns:
            The folded result
        """
        if self.max_workers <= 1 or len(chunks) <= 1:
            return self._run_inline(func, chunks, merge, initial)
        return asyncio.run(self.run_async(func, chunks, merge, initial))

    def _run_inline(self, func, chunks, merge, initial):
        start = time.perf_counter()
        acc = initial
        for chunk in chunks:
            acc = merge(acc, func(chunk))
        self.events.log_sweep(
            self.name, len(chunks), 0, (time.perf_counter() - start) * 1000, workers=1
        )
        return acc

    async def run_async(
        self,
        func: Callable[[C], R],
        chunks: Sequence[C],
        merge: Callable[[A, R], A],
        initial: A,
        executor: Optional[Executor] = None,
    ) -> A:
        """
        Async variant of run(); awaitable from an existing event loop

        Args:
            func: Picklable module-level function applied to each chunk
            chunks: Work items
            merge: Fold function
            initial: Initial accumulator
            executor: Optional executor to reuse (a process pool is created otherwise)

        Returns:
            The folded result

        Raises:
            Exception: the first exception raised by any chunk, after all
                chunks have finished and every failure has been logged
        """
        if not chunks:
            return initial

        start = time.perf_counter()
        semaphore = asyncio.Semaphore(max(1, self.max_workers))
        loop = asyncio.get_running_loop()

        own_executor = executor is None
        pool = executor or ProcessPoolExecutor(max_workers=max(1, self.max_workers))
        try:
            tasks = [
                self._run_chunk_with_semaphore(loop, pool, semaphore, func, chunk)
                for chunk in chunks
            ]
            results = await asyncio.gather(*tasks, return_exceptions=True)
        finally:
            if own_executor:
                pool.shutdown(wait=True)

        failures = []
        acc = initial
        for index, result in enumerate(results):
            if isinstance(result, BaseException):
                failures.append(result)
                self.events.log_error_with_context(result, {"sweep": self.name, "chunk": index})
            else:
                acc = merge(acc, result)

        self.events.log_sweep(
            self.name,
            len(chunks),
            len(failures),
            (time.perf_counter() - start) * 1000,
            workers=self.max_workers,
        )
        self.logger.info(
            f"Completed {self.name}: {len(chunks) - len(failures)} successful, {len(failures)} failed"
        )

        if failures:
            raise failures[0]
        return acc

    async def _run_chunk_with_semaphore(self, loop, pool, semaphore, func, chunk):
        async with semaphore:
            return await loop.run_in_executor(pool, func, chunk)
