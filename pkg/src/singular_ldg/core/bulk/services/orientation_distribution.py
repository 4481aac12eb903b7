from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from diwire import Injected

from singular_ldg.core.bulk.entities.multipliers import Multipliers
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService


@dataclass(kw_only=True)
class OrientationDistributionService(BaseService):
    """Recover the long-axis orientation density described by a set of multipliers."""

    _algebra: Injected[QTensorAlgebraService]

    def density(self, *, multipliers: Multipliers, directions: npt.ArrayLike) -> FloatArray:
        """Evaluate the normalized density at unit vectors ``(..., 3)``.

        Returns:
            Density values with the batch shape of ``directions``.
        """
        local = np.asarray(directions, dtype=np.float64) @ multipliers.frame
        return np.exp(local**2 @ multipliers.lambdas - multipliers.log_z)

    def order_tensor(self, *, multipliers: Multipliers, quadrature: SphereQuadrature) -> QTensor:
        """Integrate ``(p p^T - I/3) rho(p)`` over the sphere with the full rule.

        Returns:
            The macroscopic order parameter of the density.
        """
        rho = self.density(multipliers=multipliers, directions=quadrature.nodes)
        second_moment = np.einsum(
            "n,ni,nj->ij",
            quadrature.weights * rho,
            quadrature.nodes,
            quadrature.nodes,
        )
        return QTensor(components=self._algebra.from_matrix(matrix=second_moment))
