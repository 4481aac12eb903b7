import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.energy.exceptions.infeasible_field import InfeasibleFieldError
from singular_ldg.core.energy.services.equilibrium_residual import EquilibriumResidualService
from singular_ldg.core.experiment.dtos.run_config import RunConfig
from singular_ldg.core.field.constraints.grid import MIN_NODES_PER_AXIS
from singular_ldg.core.field.services.field_builder import FieldBuilderService
from singular_ldg.core.minimizer.exceptions.infeasible_initial_field import (
    InfeasibleInitialFieldError,
)
from singular_ldg.core.minimizer.services.armijo_descent import ArmijoDescentService
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.verification.constraints.thresholds import (
    MIN_REFINEMENT_SIZES,
    QUARTER_INSET_FRACTION,
)
from singular_ldg.core.verification.entities.refinement_row import RefinementRow
from singular_ldg.core.verification.entities.refinement_study import RefinementStudy
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.core.verification.exceptions.refinement_solve import RefinementSolveError
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class RunRefinementStudyUseCase(BaseUseCase):
    """Solve one configuration on a sequence of square grids and compare diagnostics.

    Each size reuses the configured domain, boundary data, parameters and solver
    options; only the node counts change.
    """

    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115
    REFINEMENT_SOLVE_ERROR: ClassVar = RefinementSolveError  # noqa: WPS115
    INFEASIBLE_INITIAL_FIELD_ERROR: ClassVar = InfeasibleInitialFieldError  # noqa: WPS115
    INFEASIBLE_FIELD_ERROR: ClassVar = InfeasibleFieldError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _field_builder: Injected[FieldBuilderService]
    _descent_service: Injected[ArmijoDescentService]
    _residual_service: Injected[EquilibriumResidualService]

    def execute(self, *, config: RunConfig, sizes: list[int]) -> RefinementStudy:
        """Run every size in increasing order.

        Returns:
            One row per size.
        """
        if len(sizes) < MIN_REFINEMENT_SIZES:
            raise self.INVALID_PROBE_ERROR(reason="a refinement study needs at least two sizes")
        if min(sizes) < MIN_NODES_PER_AXIS:
            raise self.INVALID_PROBE_ERROR(
                reason=f"grid sizes must be at least {MIN_NODES_PER_AXIS}",
            )
        if any(coarse >= fine for coarse, fine in zip(sizes, sizes[1:], strict=False)):
            raise self.INVALID_PROBE_ERROR(reason="grid sizes must increase strictly")

        inset = QUARTER_INSET_FRACTION * min(config.grid.width, config.grid.height)
        rows = tuple(self._run_size(config=config, nodes=nodes, inset=inset) for nodes in sizes)
        study = RefinementStudy(rows=rows)
        logger.info(
            "Refinement over %s: residual decreases=%s el residual decreases=%s "
            "margin stable=%s energy stable=%s",
            sizes,
            study.residual_decreases,
            study.el_residual_decreases,
            study.margin_stable,
            study.energy_stable,
        )
        return study

    def _run_size(self, *, config: RunConfig, nodes: int, inset: float) -> RefinementRow:
        field = self._field_builder.make_field(
            grid=config.grid.model_copy(update={"nx": nodes, "ny": nodes}),
            boundary=config.boundary,
            interior_init=config.interior_init,
            seed=config.solver.seed,
        )
        result = self._descent_service.minimize(
            field=field,
            bulk=config.bulk,
            constants=config.elastic,
            options=config.solver,
        )
        if not result.report.converged:
            raise self.REFINEMENT_SOLVE_ERROR(nodes=nodes, termination=result.report.termination)

        el_residual = self._residual_service.el_residual(
            field=result.field,
            bulk=config.bulk,
            constants=config.elastic,
            inset=inset,
        )
        strong_residual = self._residual_service.strong_form_residual(
            field=result.field,
            bulk=config.bulk,
            constants=config.elastic,
            inset=inset,
        )
        interior = result.field.values[result.field.inset_mask(inset)]
        row = RefinementRow(
            nodes=nodes,
            energy=result.report.final_energy,
            el_residual_l2=el_residual.l2_norm,
            strong_residual_l2=strong_residual.l2_norm,
            interior_margin=float(self._algebra.margins(values=interior).min()),
            iterations=result.report.iterations,
        )
        logger.info(
            "Grid %dx%d: energy=%.12g el residual=%.3e strong residual=%.3e margin=%.4g "
            "after %d iterations",
            nodes,
            nodes,
            row.energy,
            row.el_residual_l2,
            row.strong_residual_l2,
            row.interior_margin,
            row.iterations,
        )
        return row
