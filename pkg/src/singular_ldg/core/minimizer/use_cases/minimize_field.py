import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.minimizer.dtos.solver_options import SolverOptions
from singular_ldg.core.minimizer.entities.minimization_result import MinimizationResult
from singular_ldg.core.minimizer.exceptions.infeasible_initial_field import (
    InfeasibleInitialFieldError,
)
from singular_ldg.core.minimizer.services.armijo_descent import ArmijoDescentService
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class MinimizeFieldUseCase(BaseUseCase):
    """Relax a field toward equilibrium with its boundary values held fixed."""

    INFEASIBLE_INITIAL_FIELD_ERROR: ClassVar = InfeasibleInitialFieldError  # noqa: WPS115

    _descent_service: Injected[ArmijoDescentService]

    def execute(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
        options: SolverOptions,
    ) -> MinimizationResult:
        """Minimize the total energy from ``field`` with Armijo-guarded BB steps.

        Returns:
            The final field and the solve report.
        """
        logger.info(
            "Minimizing on a %dx%d grid with T=%g kappa=%g",
            field.nx,
            field.ny,
            bulk.temperature,
            bulk.kappa,
        )
        return self._descent_service.minimize(
            field=field,
            bulk=bulk,
            constants=constants,
            options=options,
        )
