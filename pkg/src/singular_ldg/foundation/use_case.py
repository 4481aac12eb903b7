from abc import ABC, abstractmethod
from typing import Any


class BaseUseCase(ABC):
    """Base contract for one end-to-end workflow exposed through ``execute``."""

    @abstractmethod
    def execute(self, *args: Any, **kwargs: Any) -> Any:
        """Carry one request through the collaborating services.

        Returns:
            The workflow result.
        """
        raise NotImplementedError
