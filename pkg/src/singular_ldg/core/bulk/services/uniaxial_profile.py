from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.potential_sample import PotentialSample
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.bulk.factories.sphere_quadrature import SphereQuadratureFactory
from singular_ldg.core.bulk.services.moment_inversion import MomentInversionService
from singular_ldg.core.qtensor.constraints.physical_set import ISOTROPIC_SECOND_MOMENT
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.foundation.service import BaseService

_DIRECTOR = np.array([0.0, 0.0, 1.0])


@dataclass(kw_only=True)
class UniaxialProfileService(BaseService):
    """Sample the potential along uniaxial tensors ``s (e3 e3^T - I/3)``.

    The quadrature order is raised with the margin so that the concentrated
    densities close to the boundary stay resolved.
    """

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _inversion: Injected[MomentInversionService]
    _quadrature_factory: Injected[SphereQuadratureFactory]

    def sample(self, *, s: float, params: BulkParams) -> PotentialSample:
        """Evaluate ``f_ms`` and ``psi_b`` at one order parameter.

        Returns:
            The potential sample with its multipliers.
        """
        q = self._algebra.uniaxial(s=s, director=_DIRECTOR)
        eigenvalues, _ = self._algebra.eigen_batch(values=q.components)
        margin = float(self._algebra.margins_from_eigenvalues(eigenvalues=eigenvalues))
        if margin < self._inversion.feasibility_floor:
            raise self.NEAR_BOUNDARY_ERROR(margin=margin, floor=self._inversion.feasibility_floor)

        quadrature = self._quadrature_factory.for_margin(order=params.quad_order, margin=margin)
        solved = self._inversion.solve_multipliers(eigenvalues=eigenvalues, quadrature=quadrature)
        f_ms = float(solved.lambdas @ (eigenvalues + ISOTROPIC_SECOND_MOMENT) - solved.log_z)
        return PotentialSample(
            s=s,
            f_ms=f_ms,
            psi_b=params.temperature * f_ms - params.kappa * float(q.components @ q.components),
            margin=margin,
            lambdas=solved.lambdas,
            quadrature_order=quadrature.order,
        )

    def infeasible(self, *, s: float) -> PotentialSample:
        """Describe an order parameter outside the evaluable region.

        Returns:
            A sample with infinite potentials and undefined multipliers.
        """
        q = self._algebra.uniaxial(s=s, director=_DIRECTOR)
        return PotentialSample(
            s=s,
            f_ms=np.inf,
            psi_b=np.inf,
            margin=self._algebra.margin(q=q).value,
            lambdas=np.full(3, np.nan),
            quadrature_order=0,
        )
