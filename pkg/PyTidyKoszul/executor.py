import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from typing import Any, Callable, List, Optional, Sequence

from .exceptions import ComputationError

logger = logging.getLogger(__name__)


class Executor:
    """Runs sweep chunks either in-process (``jobs == 1``) or on a process pool.

    Results always come back in chunk order, so aggregation never depends on
    scheduling.
    """

    def __init__(self, **kwargs):
        self.__jobs: int = max(1, int(kwargs.pop("jobs", 1) or 1))
        self.__pool: Optional[ProcessPoolExecutor] = None

    @property
    def jobs(self) -> int:
        return self.__jobs

    async def pool_init(self) -> None:
        if self.__jobs > 1 and self.__pool is None:
            self.__pool = ProcessPoolExecutor(max_workers=self.__jobs)
            logger.debug("started process pool with %d workers", self.__jobs)

    async def pool_close(self) -> None:
        if self.__pool is not None:
            self.__pool.shutdown(wait=True)
            self.__pool = None

    async def map_chunks(self, fn: Callable, payloads: Sequence[tuple]) -> List[Any]:
        if self.__jobs == 1 or len(payloads) <= 1:
            return [fn(*payload) for payload in payloads]

        await self.pool_init()
        loop = asyncio.get_running_loop()
        futures = [loop.run_in_executor(self.__pool, fn, *payload) for payload in payloads]
        try:
            return list(await asyncio.gather(*futures))
        except BrokenProcessPool as e:
            self.__pool = None
            raise ComputationError(f"a worker process died: {e}")

    def split(self, items: Sequence, per_worker: int = 4) -> List[list]:
        """Contiguous chunks, a few per worker; order is preserved."""
        items = list(items)
        if not items:
            return []
        count = min(len(items), self.__jobs * per_worker if self.__jobs > 1 else 1)
        size = -(-len(items) // count)
        return [items[i:i + size] for i in range(0, len(items), size)]
