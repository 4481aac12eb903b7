from pathlib import Path

from singular_ldg.foundation.dto import BaseDTO


class OutputPaths(BaseDTO):
    """Default destinations for the final field and the solver trace."""

    field: Path | None = None
    trace: Path | None = None
