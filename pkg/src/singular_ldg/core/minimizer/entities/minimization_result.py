from dataclasses import dataclass

from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.minimizer.entities.solve_report import SolveReport


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class MinimizationResult:
    """Final iterate of a descent run with its history."""

    field: Field
    report: SolveReport
