from dataclasses import dataclass

from singular_ldg.core.energy.entities.energy_breakdown import EnergyBreakdown
from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class EnergyEvaluation:
    """Energy with its nodal gradient and the gauss-point data behind it.

    ``gradient`` is ``None`` when it was not requested or the field is infeasible.
    ``lambdas`` can warm-start the next evaluation on the same grid.
    """

    breakdown: EnergyBreakdown
    gradient: FloatArray | None
    lambdas: FloatArray
    margins: FloatArray
