from singular_ldg.core.bulk.exceptions.bulk_potential import BulkPotentialError


class MomentInversionError(BulkPotentialError):
    """Raised when Newton iteration fails to match the target second moments."""

    def __init__(self, *, residual: float, iterations: int) -> None:
        super().__init__(
            f"Moment inversion did not converge after {iterations} iterations "
            f"(moment residual {residual:.3e})",
        )
        self.residual = residual
        self.iterations = iterations
