from singular_ldg.core.bulk.exceptions.bulk_potential import BulkPotentialError


class QuadratureOrderError(BulkPotentialError):
    """Raised when a sphere quadrature order is below the supported minimum."""

    def __init__(self, *, order: int, minimum: int) -> None:
        super().__init__(f"Quadrature order must be at least {minimum}, got {order}")
        self.order = order
        self.minimum = minimum
