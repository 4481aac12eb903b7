from singular_ldg.core.qtensor.exceptions.q_tensor import QTensorError


class InvalidComponentsError(QTensorError):
    """Raised when tensor coordinates are not a five-vector."""

    def __init__(self, *, shape: tuple[int, ...]) -> None:
        super().__init__(f"Expected five tensor coordinates, got an array of shape {shape}")
        self.shape = shape
