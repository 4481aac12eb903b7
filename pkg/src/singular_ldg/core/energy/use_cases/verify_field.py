import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.energy.entities.field_verification import FieldVerification
from singular_ldg.core.energy.services.energy_assembler import EnergyAssemblerService
from singular_ldg.core.energy.services.equilibrium_residual import EquilibriumResidualService
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.empty_inset import EmptyInsetError
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class VerifyFieldUseCase(BaseUseCase):
    """Report the energy breakdown and equilibrium residuals of a field."""

    EMPTY_INSET_ERROR: ClassVar = EmptyInsetError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _assembler: Injected[EnergyAssemblerService]
    _residual_service: Injected[EquilibriumResidualService]

    def execute(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
        inset: float = 0.0,
    ) -> FieldVerification:
        """Check a stored field: energy breakdown, residuals and interior margin.

        Returns:
            The breakdown, both residuals when the field is feasible, and the smallest
            nodal margin over the interior.
        """
        interior_margin = float(
            self._algebra.margins(values=field.values[field.interior_mask]).min(),
        )
        breakdown = self._assembler.total_energy(field=field, bulk=bulk, constants=constants)
        if not breakdown.is_feasible:
            logger.warning(
                "Field is infeasible at cell %s; residuals are not evaluated",
                breakdown.infeasible_cell,
            )
            return FieldVerification(
                breakdown=breakdown,
                el_residual=None,
                strong_residual=None,
                interior_margin=interior_margin,
            )

        return FieldVerification(
            breakdown=breakdown,
            el_residual=self._residual_service.el_residual(
                field=field,
                bulk=bulk,
                constants=constants,
                inset=inset,
            ),
            strong_residual=self._residual_service.strong_form_residual(
                field=field,
                bulk=bulk,
                constants=constants,
                inset=inset,
            ),
            interior_margin=interior_margin,
        )
