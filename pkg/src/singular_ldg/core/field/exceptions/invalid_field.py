from singular_ldg.core.field.exceptions.field import FieldError


class InvalidFieldError(FieldError):
    """Raised when field values or extents do not describe a valid grid."""

    def __init__(self, *, reason: str) -> None:
        super().__init__(f"Invalid field: {reason}")
        self.reason = reason
