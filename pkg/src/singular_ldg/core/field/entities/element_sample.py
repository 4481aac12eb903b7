from dataclasses import dataclass

from singular_ldg.core.elastic.entities.gradient_pair import GradientPair
from singular_ldg.core.qtensor.entities.q_tensor import QTensor


@dataclass(frozen=True, kw_only=True, slots=True)
class ElementSample:
    """Interpolated tensor and gradient at one gauss point, with its quadrature weight."""

    q: QTensor
    gradient: GradientPair
    weight: float
