from dataclasses import dataclass
from typing import ClassVar

import numpy as np
import numpy.typing as npt
from diwire import Injected

from singular_ldg.core.elastic.constraints.invariants import INVARIANCE_TOLERANCE
from singular_ldg.core.elastic.entities.gradient_pair import GradientPair
from singular_ldg.core.elastic.entities.invariance_report import InvarianceReport
from singular_ldg.core.elastic.services.elastic_invariants import ElasticInvariantsService
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.exceptions.non_orthogonal_rotation import NonOrthogonalRotationError
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.foundation.service import BaseService


@dataclass(kw_only=True)
class FrameInvarianceService(BaseService):
    """Compare the elastic invariants of a sample before and after a change of frame.

    The gradient is transformed as a third-order tensor, so after a general rotation
    the x3 derivative slice is no longer zero and the general contraction path is used.
    ``I1..I4`` are invariant under every orthogonal map; ``I5`` changes sign under
    improper ones.
    """

    NON_ORTHOGONAL_ROTATION_ERROR: ClassVar = NonOrthogonalRotationError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _invariants: Injected[ElasticInvariantsService]

    def invariance_suite(
        self,
        *,
        q: QTensor,
        gradient: GradientPair,
        rotation: npt.ArrayLike,
    ) -> InvarianceReport:
        """Transform ``(Q, DQ)`` by ``rotation`` and check each invariant.

        Returns:
            Invariants before and after, with a per-invariant verdict.
        """
        rotation_matrix = self._algebra.validated_rotation(rotation=rotation)
        q_matrix = self._algebra.to_matrix(values=q.components)
        full_gradient = np.zeros((3, 3, 3))
        full_gradient[..., 0] = self._algebra.to_matrix(values=gradient.dx.components)
        full_gradient[..., 1] = self._algebra.to_matrix(values=gradient.dy.components)

        rotated_q = rotation_matrix @ q_matrix @ rotation_matrix.T
        rotated_gradient = np.einsum(
            "ia,jb,kc,abc->ijk",
            rotation_matrix,
            rotation_matrix,
            rotation_matrix,
            full_gradient,
        )

        original = self._invariants.invariants_general(
            q_matrix=q_matrix[np.newaxis],
            gradient=full_gradient[np.newaxis],
        )[0]
        transformed = self._invariants.invariants_general(
            q_matrix=rotated_q[np.newaxis],
            gradient=rotated_gradient[np.newaxis],
        )[0]

        proper = bool(np.linalg.det(rotation_matrix) > 0)
        expected = original.copy()
        if not proper:
            expected[-1] = -expected[-1]

        tolerance = INVARIANCE_TOLERANCE * np.maximum(1.0, np.abs(original))
        return InvarianceReport(
            original=original,
            transformed=transformed,
            expected=expected,
            holds=np.abs(transformed - expected) <= tolerance,
            proper=proper,
        )
