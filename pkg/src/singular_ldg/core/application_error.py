class ApplicationError(Exception):
    """Base class for all application-specific exceptions."""
