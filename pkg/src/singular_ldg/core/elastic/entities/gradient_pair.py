from dataclasses import dataclass

from singular_ldg.core.qtensor.entities.q_tensor import QTensor


@dataclass(frozen=True, kw_only=True, slots=True)
class GradientPair:
    """In-plane derivatives of a tensor field; the x3 derivative is identically zero."""

    dx: QTensor
    dy: QTensor
