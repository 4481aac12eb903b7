import logging
from dataclasses import dataclass
from pathlib import Path
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.experiment.dtos.run_config import RunConfig
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.field_format import FieldFormatError
from singular_ldg.core.field.exceptions.grid_mismatch import GridMismatchError
from singular_ldg.core.field.exceptions.infeasible_boundary import InfeasibleBoundaryError
from singular_ldg.core.field.services.field_builder import FieldBuilderService
from singular_ldg.core.field.services.field_csv import FieldCsvService
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class PrepareInitialFieldUseCase(BaseUseCase):
    """Produce the starting iterate of a run.

    A field file, when given, supplies both the Dirichlet data and the interior;
    otherwise the field is generated from the configured boundary and interior
    initialization, seeded with ``solver.seed``.
    """

    GRID_MISMATCH_ERROR: ClassVar = GridMismatchError  # noqa: WPS115
    FIELD_FORMAT_ERROR: ClassVar = FieldFormatError  # noqa: WPS115
    INFEASIBLE_BOUNDARY_ERROR: ClassVar = InfeasibleBoundaryError  # noqa: WPS115

    _field_builder: Injected[FieldBuilderService]
    _field_csv: Injected[FieldCsvService]

    def execute(self, *, config: RunConfig, init_path: Path | None = None) -> Field:
        """Load or build the initial field.

        Returns:
            A field on the configured grid.
        """
        if init_path is None:
            return self._field_builder.make_field(
                grid=config.grid,
                boundary=config.boundary,
                interior_init=config.interior_init,
                seed=config.solver.seed,
            )

        field = self._field_csv.load_csv(path=init_path, expected_grid=config.grid)
        logger.info("Starting from the %dx%d field in %s", field.nx, field.ny, init_path)
        return field
