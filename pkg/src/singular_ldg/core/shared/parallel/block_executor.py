from abc import ABC, abstractmethod
from collections.abc import Callable


class BlockExecutor(ABC):
    """Contract for running independent work over fixed index blocks.

    Blocks are a function of the problem size and the configured block size only,
    never of the worker count, so block results are identical however many
    workers run them. Results are returned in block order.
    """

    @abstractmethod
    def map_blocks[BlockResult](
        self,
        *,
        size: int,
        function: Callable[[slice], BlockResult],
    ) -> list[BlockResult]:
        """Apply ``function`` to consecutive slices covering ``range(size)``.

        Returns:
            One result per block, ordered by block start.
        """
        raise NotImplementedError
