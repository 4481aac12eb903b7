from singular_ldg.core.application_error import ApplicationError


class VerificationError(ApplicationError):
    """Base application error for verification probes."""
