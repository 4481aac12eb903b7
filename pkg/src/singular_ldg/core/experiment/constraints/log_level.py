from enum import StrEnum


class LogLevel(StrEnum):
    """Verbosity a run configuration may request."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
