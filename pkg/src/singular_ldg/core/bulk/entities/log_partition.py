from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class LogPartition:
    """Log-normalizer of the exponential family and its first two derivatives."""

    log_z: float
    moments: FloatArray
    covariance: FloatArray
