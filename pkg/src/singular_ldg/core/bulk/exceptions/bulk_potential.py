from singular_ldg.core.application_error import ApplicationError


class BulkPotentialError(ApplicationError):
    """Base application error for the bulk potential."""
