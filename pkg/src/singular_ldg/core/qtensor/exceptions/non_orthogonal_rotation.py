from singular_ldg.core.qtensor.exceptions.q_tensor import QTensorError


class NonOrthogonalRotationError(QTensorError):
    """Raised when a frame transformation is not orthogonal."""

    def __init__(self, *, deviation: float) -> None:
        super().__init__(f"Rotation is not orthogonal: |R^T R - I| = {deviation:.3e}")
        self.deviation = deviation
