from singular_ldg.core.elastic.exceptions.elastic import ElasticError


class InvalidSampleCountError(ElasticError):
    """Raised when a coercivity audit is asked for a negative number of samples."""

    def __init__(self, *, samples: int) -> None:
        super().__init__(f"Sample count must be non-negative, got {samples}")
        self.samples = samples
