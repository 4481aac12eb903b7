import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.factories.sphere_quadrature import SphereQuadratureFactory
from singular_ldg.core.bulk.services.maier_saupe_potential import MaierSaupePotentialService
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.services.elastic_invariants import ElasticInvariantsService
from singular_ldg.core.energy.entities.residual_report import ResidualReport
from singular_ldg.core.energy.exceptions.infeasible_field import InfeasibleFieldError
from singular_ldg.core.energy.services.energy_assembler import EnergyAssemblerService
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.empty_inset import EmptyInsetError
from singular_ldg.core.qtensor.constraints.physical_set import S0_DIMENSION
from singular_ldg.core.shared.arrays import BoolArray, FloatArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class EquilibriumResidualService(BaseService):
    """Measure how far a field is from satisfying the equilibrium equation.

    Two measurements are available. :meth:`el_residual` divides the exact gradient
    of the discrete energy by the lumped nodal mass ``hx * hy``; it vanishes at
    discrete minimizers. :meth:`strong_form_residual` evaluates
    ``-div G_D + G_Q + psi_b'`` with conservative centred differences, independently
    of the element discretization, and so measures consistency with the continuum
    equation.
    """

    INFEASIBLE_FIELD_ERROR: ClassVar = InfeasibleFieldError  # noqa: WPS115
    EMPTY_INSET_ERROR: ClassVar = EmptyInsetError  # noqa: WPS115

    _assembler: Injected[EnergyAssemblerService]
    _invariants: Injected[ElasticInvariantsService]
    _potential: Injected[MaierSaupePotentialService]
    _quadrature_factory: Injected[SphereQuadratureFactory]

    def el_residual(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
        inset: float = 0.0,
    ) -> ResidualReport:
        """Mass-normalized discrete Euler-Lagrange residual.

        Returns:
            Residual per node with norms over interior nodes at least ``inset`` deep.
        """
        mask = self._measured_nodes(field=field, inset=inset)
        gradient = self._assembler.grad_energy(field=field, bulk=bulk, constants=constants)
        return _report(
            field=field,
            residual=gradient / (field.hx * field.hy),
            mask=mask,
            inset=inset,
        )

    def strong_form_residual(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
        inset: float = 0.0,
    ) -> ResidualReport:
        """Finite-difference residual of the continuum equilibrium equation.

        Fluxes ``G_D`` are evaluated at edge midpoints, where the normal derivative is
        a one-cell difference and the tangential one the mean of the centred
        differences at the two end nodes.

        Returns:
            Residual per node with norms over interior nodes at least ``inset`` deep.
        """
        mask = self._measured_nodes(field=field, inset=inset)
        values = field.values
        hx = field.hx
        hy = field.hy

        centred_x = (values[2:] - values[:-2]) / (2.0 * hx)
        centred_y = (values[:, 2:] - values[:, :-2]) / (2.0 * hy)

        x_flux = self._flux(
            q_values=0.5 * (values[:-1, 1:-1] + values[1:, 1:-1]),
            dx=(values[1:, 1:-1] - values[:-1, 1:-1]) / hx,
            dy=0.5 * (centred_y[:-1] + centred_y[1:]),
            constants=constants,
            axis=0,
        )
        y_flux = self._flux(
            q_values=0.5 * (values[1:-1, :-1] + values[1:-1, 1:]),
            dx=0.5 * (centred_x[:, :-1] + centred_x[:, 1:]),
            dy=(values[1:-1, 1:] - values[1:-1, :-1]) / hy,
            constants=constants,
            axis=1,
        )
        divergence = (x_flux[1:] - x_flux[:-1]) / hx + (y_flux[:, 1:] - y_flux[:, :-1]) / hy

        interior = values[1:-1, 1:-1]
        shape = interior.shape
        by_q, _, _ = self._invariants.density_grad_batch(
            q_values=interior.reshape(-1, S0_DIMENSION),
            dx=centred_x[:, 1:-1].reshape(-1, S0_DIMENSION),
            dy=centred_y[1:-1].reshape(-1, S0_DIMENSION),
            constants=constants,
        )
        bulk_gradient = self._bulk_gradient(values=interior, bulk=bulk)

        residual = np.zeros_like(values)
        residual[1:-1, 1:-1] = -divergence + by_q.reshape(shape) + bulk_gradient
        return _report(field=field, residual=residual, mask=mask, inset=inset)

    def _measured_nodes(self, *, field: Field, inset: float) -> BoolArray:
        mask = field.interior_mask & field.inset_mask(inset)
        if not mask.any():
            raise self.EMPTY_INSET_ERROR(inset=inset)

        return mask

    def _flux(
        self,
        *,
        q_values: FloatArray,
        dx: FloatArray,
        dy: FloatArray,
        constants: ElasticConstants,
        axis: int,
    ) -> FloatArray:
        _, by_dx, by_dy = self._invariants.density_grad_batch(
            q_values=q_values.reshape(-1, S0_DIMENSION),
            dx=dx.reshape(-1, S0_DIMENSION),
            dy=dy.reshape(-1, S0_DIMENSION),
            constants=constants,
        )
        normal = by_dx if axis == 0 else by_dy
        return normal.reshape(q_values.shape)

    def _bulk_gradient(self, *, values: FloatArray, bulk: BulkParams) -> FloatArray:
        flat = values.reshape(-1, S0_DIMENSION)
        evaluation = self._potential.evaluate_batch(
            values=flat,
            quadrature=self._quadrature_factory(order=bulk.quad_order),
        )
        if not evaluation.all_feasible:
            node = np.unravel_index(int(np.flatnonzero(~evaluation.feasible)[0]), values.shape[:2])
            raise self.INFEASIBLE_FIELD_ERROR(cell=(int(node[0]), int(node[1])))

        gradient = bulk.temperature * evaluation.gradient - 2.0 * bulk.kappa * flat
        return gradient.reshape(values.shape)


def _report(
    *,
    field: Field,
    residual: FloatArray,
    mask: BoolArray,
    inset: float,
) -> ResidualReport:
    masked = np.where(mask[..., np.newaxis], residual, 0.0)
    norms = np.linalg.norm(masked, axis=-1)
    l2_norm = float(np.sqrt(field.hx * field.hy * np.sum(norms**2)))
    linf_norm = float(norms.max())
    nodes = int(mask.sum())
    logger.debug(
        "Residual over %d nodes at inset %g: l2=%.3e linf=%.3e",
        nodes,
        inset,
        l2_norm,
        linf_norm,
    )
    return ResidualReport(
        l2_norm=l2_norm,
        linf_norm=linf_norm,
        residual=masked,
        inset=inset,
        nodes=nodes,
    )
