from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class SpectralDecomposition:
    """Ascending eigenvalues and a right-handed frame whose columns are the eigenvectors."""

    eigenvalues: FloatArray
    frame: FloatArray
