from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class ResidualReport:
    """Equilibrium residual per node, with norms over nodes at least ``inset`` from the boundary.

    ``l2_norm`` is the area-weighted discrete L2 norm and ``linf_norm`` the largest
    per-node Euclidean norm. ``residual`` is zero outside the measured nodes.
    """

    l2_norm: float
    linf_norm: float
    residual: FloatArray
    inset: float
    nodes: int
