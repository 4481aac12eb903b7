from singular_ldg.core.application_error import ApplicationError


class EnergyError(ApplicationError):
    """Base application error for energy assembly."""
