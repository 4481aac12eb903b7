from enum import StrEnum


class Termination(StrEnum):
    """Reason the descent loop stopped."""

    CONVERGED = "converged"
    MAX_ITERS = "max_iters"
    STALLED = "stalled"
