from enum import StrEnum


class BlowupPath(StrEnum):
    """Uniaxial ray toward the boundary of the physical set.

    The positive ray approaches ``s = 1`` (perfect alignment), the negative ray
    approaches ``s = -1/2`` (alignment in a plane).
    """

    POSITIVE = "uniaxial-positive"
    NEGATIVE = "uniaxial-negative"
