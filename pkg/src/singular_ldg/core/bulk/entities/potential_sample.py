from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class PotentialSample:
    """Potential values of the uniaxial tensor ``s (e3 e3^T - I/3)``."""

    s: float
    f_ms: float
    psi_b: float
    margin: float
    lambdas: FloatArray
    quadrature_order: int
