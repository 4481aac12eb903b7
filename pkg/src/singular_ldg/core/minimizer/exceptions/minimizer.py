from singular_ldg.core.application_error import ApplicationError


class MinimizerError(ApplicationError):
    """Base application error for the descent solver."""
