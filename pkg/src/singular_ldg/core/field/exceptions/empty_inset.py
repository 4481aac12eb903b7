from singular_ldg.core.field.exceptions.field import FieldError


class EmptyInsetError(FieldError):
    """Raised when no interior node lies at the requested distance from the boundary."""

    def __init__(self, *, inset: float) -> None:
        super().__init__(f"No interior node lies at distance >= {inset} from the boundary")
        self.inset = inset
