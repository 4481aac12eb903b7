from singular_ldg.core.minimizer.exceptions.minimizer import MinimizerError


class InfeasibleInitialFieldError(MinimizerError):
    """Raised when the starting iterate has infinite energy."""

    def __init__(self, *, cell: tuple[int, int] | None) -> None:
        super().__init__(f"Initial field is outside the evaluable region at cell {cell}")
        self.cell = cell
