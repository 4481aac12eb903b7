from singular_ldg.core.application_error import ApplicationError


class ElasticError(ApplicationError):
    """Base application error for elastic energy densities."""
