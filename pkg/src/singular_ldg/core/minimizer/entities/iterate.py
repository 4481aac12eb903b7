from dataclasses import dataclass

import numpy as np

from singular_ldg.core.energy.entities.energy_evaluation import EnergyEvaluation
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class Iterate:
    """A feasible field with its energy evaluation and nodal gradient."""

    field: Field
    evaluation: EnergyEvaluation
    gradient: FloatArray

    @property
    def energy(self) -> float:
        """Total discrete energy."""
        return self.evaluation.breakdown.total

    @property
    def normalized_gradient(self) -> FloatArray:
        """Gradient divided by the lumped nodal mass ``hx * hy``."""
        return self.gradient / (self.field.hx * self.field.hy)

    @property
    def grad_norm(self) -> float:
        """Largest per-node Euclidean norm of the mass-normalized gradient."""
        return float(np.linalg.norm(self.normalized_gradient, axis=-1).max())

    @property
    def margin(self) -> float:
        """Smallest margin over all gauss points."""
        return float(self.evaluation.margins.min())
