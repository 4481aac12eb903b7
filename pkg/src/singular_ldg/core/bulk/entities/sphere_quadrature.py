from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class SphereQuadrature:
    """Product rule on the unit sphere plus its collapse onto squared coordinates.

    ``nodes``/``weights`` form the full rule. Integrands that depend on the squared
    coordinates only are integrated exactly as well by ``squared_nodes`` and
    ``squared_weights``, where each row holds a distinct ``(p1^2, p2^2, p3^2)``.
    ``squared_products`` caches the row-wise outer products flattened to nine columns.
    """

    order: int
    nodes: FloatArray
    weights: FloatArray
    squared_nodes: FloatArray
    squared_weights: FloatArray
    squared_products: FloatArray
