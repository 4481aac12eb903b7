import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.bulk_evaluation import BulkEvaluation
from singular_ldg.core.bulk.entities.multipliers import Multipliers
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.exceptions.moment_inversion import MomentInversionError
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.bulk.factories.sphere_quadrature import SphereQuadratureFactory
from singular_ldg.core.bulk.services.moment_inversion import MomentInversionService
from singular_ldg.core.qtensor.constraints.physical_set import ISOTROPIC_SECOND_MOMENT, S0_DIMENSION
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class MaierSaupePotentialService(BaseService):
    """Evaluate the entropy potential ``f_ms`` and the bulk potential ``psi_b``.

    ``f_ms(Q)`` is the least entropy ``int rho log rho dp`` over orientation densities
    whose second-moment tensor is ``Q + I/3``. It is computed through the dual
    multipliers as ``sum_i lambda_i (mu_i + 1/3) - log Z`` in the eigenframe of ``Q``,
    and its gradient is ``R diag(lambda) R^T``.
    """

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115
    MOMENT_INVERSION_ERROR: ClassVar = MomentInversionError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _inversion: Injected[MomentInversionService]
    _quadrature_factory: Injected[SphereQuadratureFactory]

    def multipliers(
        self,
        *,
        q: QTensor,
        quadrature: SphereQuadrature,
        initial: FloatArray | None = None,
    ) -> Multipliers:
        """Solve the dual problem for ``q``.

        Returns:
            Multipliers with ``frame`` set to the eigenframe of ``q``.
        """
        decomposition = self._algebra.eigen(q=q)
        solved = self._inversion.solve_multipliers(
            eigenvalues=decomposition.eigenvalues,
            quadrature=quadrature,
            initial=initial,
        )
        return Multipliers(
            lambdas=solved.lambdas,
            frame=decomposition.frame,
            log_z=solved.log_z,
            iterations=solved.iterations,
        )

    def f_ms(self, *, q: QTensor, quadrature: SphereQuadrature) -> float:
        """Evaluate the constrained-entropy potential at ``q`` via its dual multipliers.

        Returns:
            ``f_ms(q)``.
        """
        decomposition = self._algebra.eigen(q=q)
        solved = self._inversion.solve_multipliers(
            eigenvalues=decomposition.eigenvalues,
            quadrature=quadrature,
        )
        second_moments = decomposition.eigenvalues + ISOTROPIC_SECOND_MOMENT
        return float(solved.lambdas @ second_moments - solved.log_z)

    def grad_f_ms(self, *, q: QTensor, quadrature: SphereQuadrature) -> QTensor:
        """Evaluate the gradient of the entropy potential in tensor coordinates.

        Returns:
            The symmetric traceless gradient.
        """
        solved = self.multipliers(q=q, quadrature=quadrature)
        lab = solved.frame @ np.diag(solved.lambdas) @ solved.frame.T
        return QTensor(components=self._algebra.from_matrix(matrix=lab))

    def psi_b(self, *, q: QTensor, params: BulkParams) -> float:
        """Evaluate ``T f_ms(Q) - kappa |Q|^2``.

        Returns:
            The bulk potential.
        """
        quadrature = self._quadrature_factory(order=params.quad_order)
        entropy = self.f_ms(q=q, quadrature=quadrature)
        return params.temperature * entropy - params.kappa * float(q.components @ q.components)

    def grad_psi_b(self, *, q: QTensor, params: BulkParams) -> QTensor:
        """Evaluate ``T grad f_ms(Q) - 2 kappa Q``.

        Returns:
            The bulk potential gradient.
        """
        quadrature = self._quadrature_factory(order=params.quad_order)
        entropy_gradient = self.grad_f_ms(q=q, quadrature=quadrature)
        return QTensor(
            components=params.temperature * entropy_gradient.components
            - 2.0 * params.kappa * q.components,
        )

    def evaluate_batch(
        self,
        *,
        values: FloatArray,
        quadrature: SphereQuadrature,
        warm_start: FloatArray | None = None,
    ) -> BulkEvaluation:
        """Evaluate ``f_ms`` and its gradient at every row of ``values``.

        Rows below the feasibility floor or whose inversion fails are flagged instead
        of raising, so callers can treat them as ``+inf``.

        Returns:
            Per-row entropy, gradient, multipliers and margins.
        """
        count = values.shape[0]
        eigenvalues, frames = self._algebra.eigen_batch(values=values)
        margins = self._algebra.margins_from_eigenvalues(eigenvalues=eigenvalues)
        feasible = np.isfinite(margins) & (margins >= self._inversion.feasibility_floor)

        entropy = np.full(count, np.inf)
        gradient = np.full((count, S0_DIMENSION), np.nan)
        lambdas = np.full((count, 3), np.nan)

        rows = np.flatnonzero(feasible)
        if rows.size:
            solution = self._inversion.solve_batch(
                targets=eigenvalues[rows],
                quadrature=quadrature,
                initial=None if warm_start is None else warm_start[rows],
            )
            solved = rows[solution.converged]
            solved_lambdas = solution.lambdas[solution.converged]
            second_moments = eigenvalues[solved] + ISOTROPIC_SECOND_MOMENT
            entropy[solved] = (
                np.einsum("ni,ni->n", solved_lambdas, second_moments)
                - solution.log_z[solution.converged]
            )
            lab = np.einsum("nik,nk,njk->nij", frames[solved], solved_lambdas, frames[solved])
            gradient[solved] = self._algebra.from_matrix(matrix=lab)
            lambdas[solved] = solved_lambdas

            unsolved = rows[~solution.converged]
            if unsolved.size:
                logger.warning(
                    "Moment inversion failed at %d of %d points; treating them as infeasible",
                    unsolved.size,
                    count,
                )
                feasible[unsolved] = False

        return BulkEvaluation(
            entropy=entropy,
            gradient=gradient,
            lambdas=lambdas,
            margins=margins,
            feasible=feasible,
        )
