from singular_ldg.core.qtensor.exceptions.q_tensor import QTensorError


class NonUnitDirectorError(QTensorError):
    """Raised when a uniaxial director is not a unit vector."""

    def __init__(self, *, norm: float) -> None:
        super().__init__(f"Director must have unit length, got |n| = {norm!r}")
        self.norm = norm
