from singular_ldg.core.application_error import ApplicationError


class QTensorError(ApplicationError):
    """Base application error for tensor algebra."""
