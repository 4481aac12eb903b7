from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class Multipliers:
    """Gauge-fixed Lagrange multipliers of the orientation density.

    The density is ``exp(sum_i lambdas_i (frame^T p)_i^2 - log_z)`` on the unit sphere.
    """

    lambdas: FloatArray
    frame: FloatArray
    log_z: float
    iterations: int
