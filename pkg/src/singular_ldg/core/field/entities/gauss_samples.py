from dataclasses import dataclass

from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class GaussSamples:
    """Interpolated values at every gauss point of a run of cells.

    Rows are ordered by cell, then by gauss point within the cell.
    """

    q_values: FloatArray
    dx: FloatArray
    dy: FloatArray
    weight: float
