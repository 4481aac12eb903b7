import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.factories.sphere_quadrature import SphereQuadratureFactory
from singular_ldg.core.bulk.services.maier_saupe_potential import MaierSaupePotentialService
from singular_ldg.core.elastic.constraints.invariants import INVARIANT_COUNT
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.services.elastic_invariants import ElasticInvariantsService
from singular_ldg.core.energy.entities.energy_breakdown import EnergyBreakdown
from singular_ldg.core.energy.entities.energy_evaluation import EnergyEvaluation
from singular_ldg.core.energy.exceptions.infeasible_field import InfeasibleFieldError
from singular_ldg.core.field.constraints.grid import GAUSS_POINTS_PER_CELL
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.services.bilinear_element import BilinearElementService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.core.shared.parallel.block_executor import BlockExecutor
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class _BlockResult:
    # Partial integrals: five elastic terms, then entropy and quadratic.
    partials: FloatArray
    corner_gradient: FloatArray | None
    lambdas: FloatArray
    margins: FloatArray
    first_infeasible_cell: int | None


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class _Problem:
    corners: FloatArray
    hx: float
    hy: float
    bulk: BulkParams
    constants: ElasticConstants
    quadrature: SphereQuadrature
    warm_start: FloatArray | None
    with_gradient: bool


@dataclass(kw_only=True)
class EnergyAssemblerService(BaseService):
    """Assemble the discrete energy ``sum_cells sum_gauss w (G(Q, DQ) + psi_b(Q))``.

    Cells are split into fixed blocks that may run concurrently. Block partial sums
    are combined in block order and nodal gradients are scattered once from the
    concatenated block contributions, so results do not depend on the worker count.
    """

    INFEASIBLE_FIELD_ERROR: ClassVar = InfeasibleFieldError  # noqa: WPS115

    _elements: Injected[BilinearElementService]
    _invariants: Injected[ElasticInvariantsService]
    _potential: Injected[MaierSaupePotentialService]
    _quadrature_factory: Injected[SphereQuadratureFactory]
    _executor: Injected[BlockExecutor]

    def total_energy(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
    ) -> EnergyBreakdown:
        """Integrate the energy of ``field``.

        Returns:
            The breakdown; ``total`` is ``+inf`` when the field is infeasible.
        """
        return self.evaluate(
            field=field,
            bulk=bulk,
            constants=constants,
            with_gradient=False,
        ).breakdown

    def grad_energy(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
    ) -> FloatArray:
        """Differentiate the energy with respect to every node value.

        Returns:
            Gradient ``(nx, ny, 5)``, zero on the boundary ring.
        """
        evaluation = self.evaluate(field=field, bulk=bulk, constants=constants)
        if evaluation.gradient is None:
            raise self.INFEASIBLE_FIELD_ERROR(cell=evaluation.breakdown.infeasible_cell)

        return evaluation.gradient

    def evaluate(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
        warm_start: FloatArray | None = None,
        with_gradient: bool = True,
    ) -> EnergyEvaluation:
        """Evaluate energy and, optionally, its gradient with one potential solve per point.

        Returns:
            The breakdown, the boundary-masked gradient, the gauss-point multipliers
            and the gauss-point margins.
        """
        problem = _Problem(
            corners=self._elements.cell_corners(values=field.values),
            hx=field.hx,
            hy=field.hy,
            bulk=bulk,
            constants=constants,
            quadrature=self._quadrature_factory(order=bulk.quad_order),
            warm_start=warm_start,
            with_gradient=with_gradient,
        )
        blocks = self._executor.map_blocks(
            size=problem.corners.shape[0],
            function=lambda cells: self._assemble_block(problem=problem, cells=cells),
        )

        partials = np.stack([block.partials for block in blocks]).sum(axis=0)
        infeasible = [
            block.first_infeasible_cell
            for block in blocks
            if block.first_infeasible_cell is not None
        ]
        lambdas = np.concatenate([block.lambdas for block in blocks])
        margins = np.concatenate([block.margins for block in blocks])

        if infeasible:
            cell = divmod(infeasible[0], field.ny - 1)
            logger.debug("Energy is infinite: cell %s left the evaluable region", cell)
            return EnergyEvaluation(
                breakdown=_breakdown(partials=partials, infeasible_cell=cell),
                gradient=None,
                lambdas=lambdas,
                margins=margins,
            )

        gradient: FloatArray | None = None
        if with_gradient:
            corner_gradient = np.concatenate([block.corner_gradient for block in blocks])
            gradient = self._elements.scatter(
                corner_values=corner_gradient,
                nx=field.nx,
                ny=field.ny,
            )
            gradient[field.boundary_mask] = 0.0

        return EnergyEvaluation(
            breakdown=_breakdown(partials=partials, infeasible_cell=None),
            gradient=gradient,
            lambdas=lambdas,
            margins=margins,
        )

    def _assemble_block(self, *, problem: _Problem, cells: slice) -> _BlockResult:
        samples = self._elements.gauss_samples(
            corners=problem.corners[cells],
            hx=problem.hx,
            hy=problem.hy,
        )
        rows = slice(cells.start * GAUSS_POINTS_PER_CELL, cells.stop * GAUSS_POINTS_PER_CELL)
        bulk_values = self._potential.evaluate_batch(
            values=samples.q_values,
            quadrature=problem.quadrature,
            warm_start=None if problem.warm_start is None else problem.warm_start[rows],
        )
        weight = samples.weight
        temperature = problem.bulk.temperature
        kappa = problem.bulk.kappa

        invariants = self._invariants.invariants_batch(
            q_values=samples.q_values,
            dx=samples.dx,
            dy=samples.dy,
        )
        partials = np.empty(INVARIANT_COUNT + 2)
        partials[:INVARIANT_COUNT] = weight * invariants.sum(axis=0) * np.asarray(
            problem.constants.weights,
        )
        partials[-1] = -kappa * weight * np.sum(samples.q_values**2)

        if not bulk_values.all_feasible:
            first_row = int(np.flatnonzero(~bulk_values.feasible)[0])
            partials[INVARIANT_COUNT] = np.inf
            return _BlockResult(
                partials=partials,
                corner_gradient=None,
                lambdas=bulk_values.lambdas,
                margins=bulk_values.margins,
                first_infeasible_cell=cells.start + first_row // GAUSS_POINTS_PER_CELL,
            )

        partials[INVARIANT_COUNT] = temperature * weight * np.sum(bulk_values.entropy)
        corner_gradient: FloatArray | None = None
        if problem.with_gradient:
            by_q, by_dx, by_dy = self._invariants.density_grad_batch(
                q_values=samples.q_values,
                dx=samples.dx,
                dy=samples.dy,
                constants=problem.constants,
            )
            by_q += temperature * bulk_values.gradient - 2.0 * kappa * samples.q_values
            corner_gradient = self._elements.pull_back(
                by_q=weight * by_q,
                by_dx=weight * by_dx,
                by_dy=weight * by_dy,
                hx=problem.hx,
                hy=problem.hy,
            )

        return _BlockResult(
            partials=partials,
            corner_gradient=corner_gradient,
            lambdas=bulk_values.lambdas,
            margins=bulk_values.margins,
            first_infeasible_cell=None,
        )


def _breakdown(*, partials: FloatArray, infeasible_cell: tuple[int, int] | None) -> EnergyBreakdown:
    elastic = tuple(float(value) for value in partials[:INVARIANT_COUNT])
    entropy = float(partials[INVARIANT_COUNT])
    quadratic = float(partials[-1])
    return EnergyBreakdown(
        elastic_terms=(elastic[0], elastic[1], elastic[2], elastic[3], elastic[4]),
        entropy_term=entropy,
        quadratic_term=quadratic,
        total=float(np.sum(partials)),
        infeasible_cell=infeasible_cell,
    )
