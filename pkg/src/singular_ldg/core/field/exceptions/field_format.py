from pathlib import Path

from singular_ldg.core.field.exceptions.field import FieldError


class FieldFormatError(FieldError):
    """Raised when a field file cannot be parsed."""

    def __init__(
        self,
        *,
        path: Path,
        row: int,
        reason: str,
        column: str | None = None,
    ) -> None:
        location = f"row {row}" if column is None else f"row {row}, column {column!r}"
        super().__init__(f"{path}: {location}: {reason}")
        self.path = path
        self.row = row
        self.column = column
        self.reason = reason
