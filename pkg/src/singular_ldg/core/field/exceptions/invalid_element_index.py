from singular_ldg.core.field.exceptions.field import FieldError


class InvalidElementIndexError(FieldError):
    """Raised when a cell or gauss point index lies outside the grid."""

    def __init__(self, *, cell: tuple[int, int], gauss: tuple[int, int]) -> None:
        super().__init__(f"No gauss point {gauss} in cell {cell}")
        self.cell = cell
        self.gauss = gauss
