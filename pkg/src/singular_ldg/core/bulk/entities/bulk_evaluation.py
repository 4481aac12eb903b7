from dataclasses import dataclass

from singular_ldg.core.shared.arrays import BoolArray, FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class BulkEvaluation:
    """Entropy potential and its gradient at a batch of tensors.

    Rows that are not ``feasible`` carry ``+inf`` entropy and ``nan`` gradient and
    multipliers. ``lambdas`` are ordered like the ascending eigenvalues.
    """

    entropy: FloatArray
    gradient: FloatArray
    lambdas: FloatArray
    margins: FloatArray
    feasible: BoolArray

    @property
    def all_feasible(self) -> bool:
        """Report whether every row was evaluated.

        Returns:
            ``True`` when no row is flagged infeasible.
        """
        return bool(self.feasible.all())
