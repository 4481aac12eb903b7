from singular_ldg.core.field.exceptions.field import FieldError


class InfeasibleBoundaryError(FieldError):
    """Raised when uniaxial boundary data would leave the physical set."""

    def __init__(self, *, s: float) -> None:
        super().__init__(
            f"Boundary order parameter s={s} must lie strictly between -1/2 and 1",
        )
        self.s = s
