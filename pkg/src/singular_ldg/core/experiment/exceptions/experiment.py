from singular_ldg.core.application_error import ApplicationError


class ExperimentError(ApplicationError):
    """Base application error for run configuration and setup."""
