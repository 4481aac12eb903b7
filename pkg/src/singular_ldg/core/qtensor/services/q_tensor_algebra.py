from dataclasses import dataclass
from typing import ClassVar

import numpy as np
import numpy.typing as npt

from singular_ldg.core.qtensor.constraints.physical_set import (
    DIRECTOR_NORM_TOLERANCE,
    EIGENVALUE_LOWER_BOUND,
    EIGENVALUE_UPPER_BOUND,
    ORTHOGONALITY_TOLERANCE,
    S0_BASIS,
)
from singular_ldg.core.qtensor.entities.physicality_margin import PhysicalityMargin
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.entities.spectral_decomposition import SpectralDecomposition
from singular_ldg.core.qtensor.exceptions.non_orthogonal_rotation import (
    NonOrthogonalRotationError,
)
from singular_ldg.core.qtensor.exceptions.non_unit_director import NonUnitDirectorError
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService


@dataclass(kw_only=True)
class QTensorAlgebraService(BaseService):
    """Coordinates, spectra and physicality margins of symmetric traceless tensors.

    Array methods accept any leading batch shape: coordinates are ``(..., 5)`` and
    matrices ``(..., 3, 3)``.
    """

    NON_UNIT_DIRECTOR_ERROR: ClassVar = NonUnitDirectorError  # noqa: WPS115
    NON_ORTHOGONAL_ROTATION_ERROR: ClassVar = NonOrthogonalRotationError  # noqa: WPS115

    def to_matrix(self, *, values: npt.ArrayLike) -> FloatArray:
        """Assemble matrices from basis coordinates.

        Returns:
            Symmetric traceless matrices with the same Frobenius norm as ``values``.
        """
        return np.einsum("...a,aij->...ij", np.asarray(values, dtype=np.float64), S0_BASIS)

    def from_matrix(self, *, matrix: npt.ArrayLike) -> FloatArray:
        """Project matrices onto the symmetric traceless subspace and return coordinates.

        Returns:
            Basis coordinates of the symmetric traceless part.
        """
        matrices = np.asarray(matrix, dtype=np.float64)
        symmetric = 0.5 * (matrices + np.swapaxes(matrices, -1, -2))
        return np.einsum("...ij,aij->...a", symmetric, S0_BASIS)

    def eigen(self, *, q: QTensor) -> SpectralDecomposition:
        """Diagonalize one tensor.

        Returns:
            Ascending eigenvalues with a right-handed eigenvector frame.
        """
        eigenvalues, frames = self.eigen_batch(values=q.components)
        return SpectralDecomposition(eigenvalues=eigenvalues, frame=frames)

    def eigen_batch(self, *, values: npt.ArrayLike) -> tuple[FloatArray, FloatArray]:
        """Diagonalize a batch of tensors given by coordinates.

        Eigenvector signs are canonical: the largest-magnitude entry of each column is
        positive, then the last column is flipped when needed for a proper rotation.

        Returns:
            Ascending eigenvalues ``(..., 3)`` and frames ``(..., 3, 3)``.
        """
        eigenvalues, frames = np.linalg.eigh(self.to_matrix(values=values))
        dominant_rows = np.argmax(np.abs(frames), axis=-2)[..., np.newaxis, :]
        signs = np.sign(np.take_along_axis(frames, dominant_rows, axis=-2))
        frames = frames * signs
        improper = np.linalg.det(frames) < 0
        frames[improper, :, 2] *= -1
        return eigenvalues, frames

    def margin(self, *, q: QTensor) -> PhysicalityMargin:
        """Measure the signed distance of the spectrum to the physical window.

        Returns:
            ``min(lambda_min + 1/3, 2/3 - lambda_max)``.
        """
        return PhysicalityMargin(value=float(self.margins(values=q.components)))

    def margins(self, *, values: npt.ArrayLike) -> FloatArray:
        """Vectorized :meth:`margin` over a batch of coordinates.

        Returns:
            Signed margins with the batch shape of ``values``.
        """
        eigenvalues = np.linalg.eigvalsh(self.to_matrix(values=values))
        return self.margins_from_eigenvalues(eigenvalues=eigenvalues)

    def margins_from_eigenvalues(self, *, eigenvalues: FloatArray) -> FloatArray:
        """Compute margins from already sorted spectra.

        Returns:
            Signed margins with the batch shape of ``eigenvalues`` minus the last axis.
        """
        return np.minimum(
            eigenvalues[..., 0] - EIGENVALUE_LOWER_BOUND,
            EIGENVALUE_UPPER_BOUND - eigenvalues[..., -1],
        )

    def uniaxial(self, *, s: float, director: npt.ArrayLike) -> QTensor:
        """Build ``s (n n^T - I/3)`` for a unit director.

        Returns:
            The uniaxial tensor with eigenvalues ``(2s/3, -s/3, -s/3)``.
        """
        director_array = np.asarray(director, dtype=np.float64)
        norm = float(np.linalg.norm(director_array))
        if abs(norm - 1.0) > DIRECTOR_NORM_TOLERANCE:
            raise self.NON_UNIT_DIRECTOR_ERROR(norm=norm)

        return QTensor(components=self.uniaxial_batch(s=s, directors=director_array))

    def uniaxial_batch(self, *, s: float, directors: FloatArray) -> FloatArray:
        """Uniaxial coordinates for a batch of unit directors ``(..., 3)``.

        Returns:
            Coordinates ``(..., 5)``.
        """
        outer = directors[..., :, np.newaxis] * directors[..., np.newaxis, :]
        return self.from_matrix(matrix=s * (outer - np.eye(3) / 3.0))

    def rotate(self, *, q: QTensor, rotation: npt.ArrayLike) -> QTensor:
        """Apply the frame change ``R Q R^T``.

        Returns:
            The rotated tensor.
        """
        rotation_matrix = self.validated_rotation(rotation=rotation)
        matrix = rotation_matrix @ self.to_matrix(values=q.components) @ rotation_matrix.T
        return QTensor(components=self.from_matrix(matrix=matrix))

    def validated_rotation(self, *, rotation: npt.ArrayLike) -> FloatArray:
        """Check that ``rotation`` is orthogonal.

        Returns:
            The rotation as a float array.
        """
        rotation_matrix = np.asarray(rotation, dtype=np.float64)
        deviation = float(np.max(np.abs(rotation_matrix.T @ rotation_matrix - np.eye(3))))
        if rotation_matrix.shape != (3, 3) or deviation > ORTHOGONALITY_TOLERANCE:
            raise self.NON_ORTHOGONAL_ROTATION_ERROR(deviation=deviation)

        return rotation_matrix
