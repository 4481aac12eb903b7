from singular_ldg.core.experiment.exceptions.experiment import ExperimentError


class ConfigurationError(ExperimentError):
    """Raised when a run configuration is missing, malformed or out of range."""

    def __init__(self, *, key_path: str, reason: str, hint: str | None = None) -> None:
        message = f"{key_path}: {reason}"
        if hint is not None:
            message = f"{message} (did you mean {hint!r}?)"

        super().__init__(message)
        self.key_path = key_path
        self.reason = reason
        self.hint = hint
