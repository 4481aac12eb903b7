from diwire import Container

from singular_ldg.core.shared.parallel.block_executor import BlockExecutor
from singular_ldg.infrastructure.parallel.block_executor import ThreadPoolBlockExecutor


def register_dependencies(container: Container) -> None:
    """Register core abstractions that need explicit concrete adapters."""
    container.add(ThreadPoolBlockExecutor, provides=BlockExecutor)
