from singular_ldg.core.energy.exceptions.energy import EnergyError


class InfeasibleFieldError(EnergyError):
    """Raised when a derivative is requested at a field outside the evaluable region."""

    def __init__(self, *, cell: tuple[int, int]) -> None:
        super().__init__(
            f"Cell {cell} has a gauss point too close to the boundary of the physical set",
        )
        self.cell = cell
