from abc import ABC, abstractmethod


class BaseConfigurator(ABC):
    """Contract for bootstrap components that apply process-wide settings before a command runs."""

    @abstractmethod
    def configure(self) -> None:
        """Apply side-effectful configuration once per process."""
        raise NotImplementedError
