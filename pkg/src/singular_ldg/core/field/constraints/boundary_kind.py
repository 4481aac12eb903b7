from enum import StrEnum


class BoundaryKind(StrEnum):
    """Dirichlet data families for the outer node ring."""

    UNIFORM_UNIAXIAL = "uniform-uniaxial"
    WINDING_DIRECTOR = "winding-director"
