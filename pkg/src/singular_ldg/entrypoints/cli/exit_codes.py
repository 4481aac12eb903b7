from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit statuses of the command-line interface."""

    SUCCESS = 0
    FAILURE = 1
    USAGE = 2
