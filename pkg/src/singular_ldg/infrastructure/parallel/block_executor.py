from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass

from diwire import Injected
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from singular_ldg.core.shared.parallel.block_executor import BlockExecutor


class ParallelSettings(BaseSettings):
    """Worker pool sizing for block-parallel assembly."""

    model_config = SettingsConfigDict(env_prefix="PARALLEL_")

    threads: int = Field(default=1, ge=1)
    block_size: int = Field(default=512, ge=1)


@dataclass(kw_only=True)
class ThreadPoolBlockExecutor(BlockExecutor):
    """Run block work on a thread pool and reassemble results in block order."""

    _settings: Injected[ParallelSettings]

    def map_blocks[BlockResult](
        self,
        *,
        size: int,
        function: Callable[[slice], BlockResult],
    ) -> list[BlockResult]:
        """Apply ``function`` to every block, in parallel when more than one thread is allowed.

        Returns:
            One result per block, ordered by block start.
        """
        blocks = _partition(size=size, block_size=self._settings.block_size)
        if self._settings.threads == 1 or len(blocks) <= 1:
            return [function(block) for block in blocks]

        max_workers = min(self._settings.threads, len(blocks))
        results: dict[int, BlockResult] = {}
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            futures = {
                executor.submit(function, block): index for index, block in enumerate(blocks)
            }
            for future in as_completed(futures):
                results[futures[future]] = future.result()

        return [results[index] for index in range(len(blocks))]


def _partition(*, size: int, block_size: int) -> list[slice]:
    return [slice(start, min(start + block_size, size)) for start in range(0, size, block_size)]
