from pathlib import Path

from singular_ldg.core.field.exceptions.field import FieldError


class GridMismatchError(FieldError):
    """Raised when a field file does not lie on the configured grid."""

    def __init__(
        self,
        *,
        path: Path,
        expected: tuple[int, int, float, float],
        actual: tuple[int, int, float, float],
    ) -> None:
        super().__init__(
            f"{path}: grid (nx, ny, width, height) = {actual} "
            f"does not match the configured {expected}",
        )
        self.path = path
        self.expected = expected
        self.actual = actual
