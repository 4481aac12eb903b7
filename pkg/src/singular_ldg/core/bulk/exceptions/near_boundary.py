from singular_ldg.core.bulk.exceptions.bulk_potential import BulkPotentialError


class NearBoundaryError(BulkPotentialError):
    """Raised when a tensor is too close to the boundary of the physical set to evaluate."""

    def __init__(self, *, margin: float, floor: float) -> None:
        super().__init__(
            f"Physicality margin {margin:.3e} is below the feasibility floor {floor:.1e}; "
            "the potential is treated as +inf",
        )
        self.margin = margin
        self.floor = floor
