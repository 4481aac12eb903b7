from singular_ldg.core.application_error import ApplicationError


class FieldError(ApplicationError):
    """Base application error for discretized tensor fields."""
