from dataclasses import dataclass

from singular_ldg.core.qtensor.entities.q_tensor import QTensor


@dataclass(frozen=True, kw_only=True, slots=True)
class DensityGradient:
    """Partial derivatives of the elastic density in tensor coordinates."""

    q: QTensor
    dx: QTensor
    dy: QTensor
