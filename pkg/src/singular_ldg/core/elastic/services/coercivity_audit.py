import logging
from dataclasses import dataclass, replace
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.elastic.constraints.invariants import (
    GRADIENT_PAIR_DIMENSION,
    PHYSICAL_BOX_HALF_WIDTH,
    QUADRATIC_INVARIANT_COUNT,
)
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.entities.coercivity_report import CoercivityReport
from singular_ldg.core.elastic.exceptions.invalid_sample_count import InvalidSampleCountError
from singular_ldg.core.elastic.services.elastic_invariants import ElasticInvariantsService
from singular_ldg.core.qtensor.constraints.physical_set import S0_DIMENSION
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)

_CHUNK = 8192


@dataclass(kw_only=True)
class CoercivityAuditService(BaseService):
    """Check the sufficient coercivity conditions and sample the quadratic form.

    The quadratic part ``sum_{i<=4} L_i I_i`` is sampled with ``Q`` uniform in the
    closure of the physical set and ``D`` uniform on the unit sphere of planar
    gradient pairs.
    """

    INVALID_SAMPLE_COUNT_ERROR: ClassVar = InvalidSampleCountError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _invariants: Injected[ElasticInvariantsService]

    def inequality_values(self, *, constants: ElasticConstants) -> tuple[float, float, float]:
        """Evaluate the three sufficient conditions, each required to be positive.

        Returns:
            ``(L1' + 5/3 L2 + 1/6 L3, L1' - 1/2 L3, L1' + L3)``.
        """
        lprime1 = constants.lprime1
        return (
            lprime1 + 5.0 / 3.0 * constants.l2 + constants.l3 / 6.0,
            lprime1 - 0.5 * constants.l3,
            lprime1 + constants.l3,
        )

    def audit(self, *, constants: ElasticConstants, samples: int, seed: int) -> CoercivityReport:
        """Evaluate the conditions and, when ``samples > 0``, the sampled lower bounds.

        Returns:
            The coercivity report.
        """
        if samples < 0:
            raise self.INVALID_SAMPLE_COUNT_ERROR(samples=samples)

        values = self.inequality_values(constants=constants)
        report = CoercivityReport(
            lprime1=constants.lprime1,
            inequality_values=values,
            satisfied=all(value > 0 for value in values),
            samples=samples,
        )
        if samples == 0:
            return report

        rng = np.random.default_rng(seed)
        empirical: list[float] = []
        ellipticity: list[float] = []
        for start in range(0, samples, _CHUNK):
            count = min(_CHUNK, samples - start)
            q_values = self.sample_physical_tensors(rng=rng, count=count)
            gradients = self.sample_unit_gradients(rng=rng, count=count)
            form = self._quadratic_form(
                q_values=q_values,
                gradients=gradients,
                constants=constants,
            )
            empirical.append(float(form.min()))
            constants_at_q = self.ellipticity_constants(q_values=q_values, constants=constants)
            ellipticity.append(float(constants_at_q.min()))

        logger.info(
            "Coercivity audit over %d samples: empirical c0 = %.6g, ellipticity c0 = %.6g",
            samples,
            min(empirical),
            min(ellipticity),
        )
        return replace(report, empirical_c0=min(empirical), ellipticity_c0=min(ellipticity))

    def ellipticity_constants(
        self,
        *,
        q_values: FloatArray,
        constants: ElasticConstants,
    ) -> FloatArray:
        """Smallest eigenvalue of the quadratic form in the gradient at each tensor.

        The form's matrix has columns ``grad_D(e_b) / 2`` for the unit gradient pairs
        ``e_b``; ``L5`` is ignored.

        Returns:
            One constant per row of ``q_values``.
        """
        count = q_values.shape[0]
        basis = np.eye(GRADIENT_PAIR_DIMENSION)
        repeated_q = np.repeat(q_values, GRADIENT_PAIR_DIMENSION, axis=0)
        repeated_basis = np.tile(basis, (count, 1))
        _, grad_dx, grad_dy = self._invariants.density_grad_batch(
            q_values=repeated_q,
            dx=repeated_basis[:, :S0_DIMENSION],
            dy=repeated_basis[:, S0_DIMENSION:],
            constants=constants.model_copy(update={"l5": 0.0}),
        )
        columns = 0.5 * np.concatenate([grad_dx, grad_dy], axis=-1)
        matrices = columns.reshape(count, GRADIENT_PAIR_DIMENSION, GRADIENT_PAIR_DIMENSION)
        symmetric = 0.5 * (matrices + np.swapaxes(matrices, -1, -2))
        return np.linalg.eigvalsh(symmetric)[:, 0]

    def sample_physical_tensors(self, *, rng: np.random.Generator, count: int) -> FloatArray:
        """Draw coordinates uniformly from the closure of the physical set.

        Returns:
            Coordinates ``(count, 5)``.
        """
        accepted: list[FloatArray] = []
        remaining = count
        while remaining > 0:
            candidates = rng.uniform(
                -PHYSICAL_BOX_HALF_WIDTH,
                PHYSICAL_BOX_HALF_WIDTH,
                size=(4 * remaining + 16, S0_DIMENSION),
            )
            inside = candidates[self._algebra.margins(values=candidates) >= 0][:remaining]
            accepted.append(inside)
            remaining -= inside.shape[0]

        return np.concatenate(accepted, axis=0)

    def sample_unit_gradients(self, *, rng: np.random.Generator, count: int) -> FloatArray:
        """Draw planar gradient pairs uniformly from the unit sphere.

        Returns:
            Stacked ``(dx, dy)`` coordinates ``(count, 10)``.
        """
        normal = rng.standard_normal(size=(count, GRADIENT_PAIR_DIMENSION))
        return normal / np.linalg.norm(normal, axis=-1, keepdims=True)

    def _quadratic_form(
        self,
        *,
        q_values: FloatArray,
        gradients: FloatArray,
        constants: ElasticConstants,
    ) -> FloatArray:
        invariants = self._invariants.invariants_batch(
            q_values=q_values,
            dx=gradients[:, :S0_DIMENSION],
            dy=gradients[:, S0_DIMENSION:],
        )
        weights = np.asarray(constants.weights[:QUADRATIC_INVARIANT_COUNT])
        return invariants[:, :QUADRATIC_INVARIANT_COUNT] @ weights
