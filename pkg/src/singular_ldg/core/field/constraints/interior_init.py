from enum import StrEnum


class InteriorInit(StrEnum):
    """Initial interior values of a generated field."""

    BOUNDARY_BLEND = "boundary-harmonic-like"
    CONSTANT = "constant"
    SEEDED_RANDOM = "seeded-random"
