from singular_ldg.core.verification.exceptions.verification import VerificationError


class RefinementSolveError(VerificationError):
    """Raised when the solve at one refinement level does not converge."""

    def __init__(self, *, nodes: int, termination: str) -> None:
        super().__init__(f"Solve on the {nodes}x{nodes} grid did not converge ({termination})")
        self.nodes = nodes
        self.termination = termination
