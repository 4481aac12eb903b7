from singular_ldg.core.verification.exceptions.verification import VerificationError


class InvalidProbeError(VerificationError):
    """Raised when probe arguments cannot produce a meaningful measurement."""

    def __init__(self, *, reason: str) -> None:
        super().__init__(f"Invalid probe: {reason}")
        self.reason = reason
