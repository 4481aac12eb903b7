from dataclasses import dataclass

import numpy as np
from diwire import Injected

from singular_ldg.core.elastic.constraints.invariants import LEVI_CIVITA, PLANAR_DERIVATIVES
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.entities.density_gradient import DensityGradient
from singular_ldg.core.elastic.entities.gradient_pair import GradientPair
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService


@dataclass(kw_only=True)
class ElasticInvariantsService(BaseService):
    """Frame-indifferent elastic invariants of a tensor and its spatial gradient.

    With ``D_ijk = d Q_ij / d x_k``::

        I1 = D_ijk D_ijk
        I2 = D_ijj D_ikk
        I3 = D_ikj D_ijk
        I4 = Q_lk D_ijl D_ijk
        I5 = eps_ljk Q_li D_kij

    Batched methods take coordinate arrays ``(n, 5)``. Planar fields carry the two
    in-plane derivative slices only; the general path accepts a full ``(n, 3, 3, 3)``
    gradient.
    """

    _algebra: Injected[QTensorAlgebraService]

    def invariants(self, *, q: QTensor, gradient: GradientPair) -> FloatArray:
        """Evaluate ``I1..I5`` for one planar sample.

        Returns:
            The five invariants.
        """
        return self.invariants_batch(
            q_values=q.components[np.newaxis, :],
            dx=gradient.dx.components[np.newaxis, :],
            dy=gradient.dy.components[np.newaxis, :],
        )[0]

    def invariants_batch(
        self,
        *,
        q_values: FloatArray,
        dx: FloatArray,
        dy: FloatArray,
    ) -> FloatArray:
        """Evaluate ``I1..I5`` for planar samples.

        Returns:
            Invariants ``(n, 5)``.
        """
        return self.invariants_general(
            q_matrix=self._algebra.to_matrix(values=q_values),
            gradient=self._planar_gradient(dx=dx, dy=dy),
        )

    def invariants_general(self, *, q_matrix: FloatArray, gradient: FloatArray) -> FloatArray:
        """Evaluate ``I1..I5`` for gradients with any number of derivative slices.

        Returns:
            Invariants ``(n, 5)``.
        """
        slices = gradient.shape[-1]
        divergence = np.einsum("nijj->ni", gradient[:, :, :slices, :])
        return np.stack(
            [
                np.einsum("nijk,nijk->n", gradient, gradient),
                np.einsum("ni,ni->n", divergence, divergence),
                np.einsum("nikj,nijk->n", gradient[:, :, :slices, :], gradient[:, :, :slices, :]),
                np.einsum("nlk,nijl,nijk->n", q_matrix[:, :slices, :slices], gradient, gradient),
                np.einsum("ljk,nli,nkij->n", LEVI_CIVITA[:, :slices, :], q_matrix, gradient),
            ],
            axis=-1,
        )

    def density(self, *, q: QTensor, gradient: GradientPair, constants: ElasticConstants) -> float:
        """Evaluate ``G = sum_i L_i I_i``.

        Returns:
            The elastic energy density.
        """
        return float(self.invariants(q=q, gradient=gradient) @ np.asarray(constants.weights))

    def density_grad(
        self,
        *,
        q: QTensor,
        gradient: GradientPair,
        constants: ElasticConstants,
    ) -> DensityGradient:
        """Differentiate ``G`` with respect to ``Q`` and both derivative slices.

        Returns:
            Partial derivatives projected onto symmetric traceless coordinates.
        """
        grad_q, grad_dx, grad_dy = self.density_grad_batch(
            q_values=q.components[np.newaxis, :],
            dx=gradient.dx.components[np.newaxis, :],
            dy=gradient.dy.components[np.newaxis, :],
            constants=constants,
        )
        return DensityGradient(
            q=QTensor(components=grad_q[0]),
            dx=QTensor(components=grad_dx[0]),
            dy=QTensor(components=grad_dy[0]),
        )

    def density_grad_batch(
        self,
        *,
        q_values: FloatArray,
        dx: FloatArray,
        dy: FloatArray,
        constants: ElasticConstants,
    ) -> tuple[FloatArray, FloatArray, FloatArray]:
        """Vectorized :meth:`density_grad` for planar samples.

        Returns:
            Coordinates ``(n, 5)`` of ``dG/dQ``, ``dG/d(dx)`` and ``dG/d(dy)``.
        """
        l1, l2, l3, l4, l5 = constants.weights
        q_matrix = self._algebra.to_matrix(values=q_values)
        gradient = self._planar_gradient(dx=dx, dy=dy)
        planar = slice(None, PLANAR_DERIVATIVES)
        epsilon = LEVI_CIVITA[:, planar, :]

        by_gradient = 2.0 * l1 * gradient
        if l2:
            divergence = np.einsum("nijj->ni", gradient[:, :, planar, :])
            by_gradient[:, :, 0, 0] += 2.0 * l2 * divergence
            by_gradient[:, :, 1, 1] += 2.0 * l2 * divergence
        if l3:
            by_gradient[:, :, planar, :] += 2.0 * l3 * np.swapaxes(gradient[:, :, planar, :], 2, 3)

        by_q = np.zeros_like(q_matrix)
        if l4:
            planar_q = q_matrix[:, planar, planar]
            by_gradient += 2.0 * l4 * np.einsum("nck,nabk->nabc", planar_q, gradient)
            by_q[:, planar, planar] += l4 * np.einsum("nijl,nijk->nlk", gradient, gradient)
        if l5:
            by_gradient += l5 * np.einsum("lca,nlb->nabc", epsilon, q_matrix)
            by_q += l5 * np.einsum("ajk,nkbj->nab", epsilon, gradient)

        return (
            self._algebra.from_matrix(matrix=by_q),
            self._algebra.from_matrix(matrix=by_gradient[..., 0]),
            self._algebra.from_matrix(matrix=by_gradient[..., 1]),
        )

    def _planar_gradient(self, *, dx: FloatArray, dy: FloatArray) -> FloatArray:
        return np.stack(
            [self._algebra.to_matrix(values=dx), self._algebra.to_matrix(values=dy)],
            axis=-1,
        )
