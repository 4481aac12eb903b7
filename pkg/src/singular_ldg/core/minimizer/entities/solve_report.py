from dataclasses import dataclass

from singular_ldg.core.minimizer.constraints.termination import Termination


@dataclass(frozen=True, kw_only=True, slots=True)
class SolveReport:
    """History of a descent run.

    Traces hold one entry per iterate, starting with the initial field; ``step_trace``
    starts with ``0.0``. ``margin_trace`` records the smallest gauss-point margin.
    """

    iterations: int
    termination: Termination
    energy_trace: tuple[float, ...]
    grad_norm_trace: tuple[float, ...]
    step_trace: tuple[float, ...]
    margin_trace: tuple[float, ...]

    @property
    def final_energy(self) -> float:
        """Energy of the returned iterate."""
        return self.energy_trace[-1]

    @property
    def final_grad_norm(self) -> float:
        """Largest mass-normalized gradient norm at the returned iterate."""
        return self.grad_norm_trace[-1]

    @property
    def final_margin(self) -> float:
        """Smallest gauss-point margin at the returned iterate."""
        return self.margin_trace[-1]

    @property
    def converged(self) -> bool:
        """Whether the gradient tolerance was met."""
        return self.termination is Termination.CONVERGED
