"""
Worker Pool for skewblocks.

Fans independent, CPU-bound tasks (enumeration subtrees) out to worker
processes without silent failures. It holds references to every submitted
future, logs exceptions as tasks complete, and hands results back in
submission order so that the outcome never depends on scheduling.
"""

import logging
from concurrent.futures import Future, ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Tuple

logger = logging.getLogger(__name__)


class WorkerPool:
    """
    Runs named tasks either inline (workers == 1) or on a process pool.

    Usage:
        with WorkerPool(workers=4) as pool:
            for first in range(1, n + 1):
                pool.add_task(count_subtree, n, patterns, first, name=f"first={first}")
            results = pool.gather()
    """

    def __init__(self, workers: int = 1):
        self.workers = max(1, int(workers))
        self._executor: Optional[ProcessPoolExecutor] = None
        # Submission order is the result order
        self._tasks: List[Tuple[str, Future]] = []

    def __enter__(self) -> "WorkerPool":
        if self.workers > 1:
            try:
                self._executor = ProcessPoolExecutor(max_workers=self.workers)
            except (OSError, NotImplementedError) as e:
                logger.warning(f"Process pool unavailable ({e}); running {self.workers}-way work inline")
                self._executor = None
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.shutdown()

    def add_task(self, fn: Callable[..., Any], *args: Any, name: str = "task") -> Future:
        """
        Schedule fn(*args). fn must be a module-level callable so it pickles.

        Args:
            fn: The callable to run
            *args: Positional arguments (must be picklable)
            name: Human-readable name for logging

        Returns:
            The Future carrying the task's result
        """
        if self._executor is None:
            future: Future = Future()
            try:
                future.set_result(fn(*args))
            except Exception as e:
                future.set_exception(e)
        else:
            future = self._executor.submit(fn, *args)

        future.add_done_callback(self._create_done_callback(name))
        self._tasks.append((name, future))
        return future

    def _create_done_callback(self, name: str) -> Callable[[Future], None]:
        """Create a closure for the done callback."""
        def done_callback(f: Future):
            try:
                if f.cancelled():
                    logger.warning(f"Task '{name}' was cancelled")
                    return
                exc = f.exception()
                if exc:
                    logger.error(f"Task '{name}' failed with error: {exc}", exc_info=exc)
                else:
                    logger.debug(f"Task '{name}' completed")
            except Exception as e:
                logger.critical(f"Critical error in task callback for '{name}': {e}", exc_info=True)

        return done_callback

    def gather(self) -> List[Any]:
        """
        Wait for every task and return results in submission order.
        The first failed task's exception is re-raised.
        """
        results = [future.result() for _, future in self._tasks]
        self._tasks.clear()
        return results

    def shutdown(self) -> None:
        """Wait for outstanding tasks and release the workers."""
        if self._executor is not None:
            pending = sum(1 for _, f in self._tasks if not f.done())
            if pending:
                logger.info(f"Waiting for {pending} tasks to complete...")
            self._executor.shutdown(wait=True)
            self._executor = None
