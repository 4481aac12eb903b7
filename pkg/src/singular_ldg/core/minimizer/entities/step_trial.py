from dataclasses import dataclass

from singular_ldg.core.minimizer.entities.iterate import Iterate


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class StepTrial:
    """Outcome of one trial step.

    ``energy`` is ``+inf`` for infeasible or unevaluated trials; ``iterate`` is set
    only when the step was accepted.
    """

    step: float
    energy: float
    iterate: Iterate | None = None

    @property
    def accepted(self) -> bool:
        """Whether the trial passed the Armijo test."""
        return self.iterate is not None
