from dataclasses import dataclass

from singular_ldg.core.shared.arrays import BoolArray, FloatArray, IntArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class MultiplierSolution:
    """Batched Newton result, one row per target spectrum."""

    lambdas: FloatArray
    log_z: FloatArray
    residual: FloatArray
    converged: BoolArray
    iterations: IntArray
