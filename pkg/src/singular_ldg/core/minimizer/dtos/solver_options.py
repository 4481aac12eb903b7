from typing import Annotated

from annotated_types import Ge, Gt, Lt
from pydantic import ConfigDict

from singular_ldg.foundation.dto import BaseDTO


class SolverOptions(BaseDTO):
    """Stopping rule and line-search constants of the descent solver.

    ``grad_tol`` bounds the largest per-node norm of the mass-normalized gradient.
    ``seed`` drives every random choice of a run, including seeded-random initial
    iterates.
    """

    model_config = ConfigDict(allow_inf_nan=False)

    max_iters: Annotated[int, Ge(0)] = 5000
    grad_tol: Annotated[float, Gt(0)] = 1e-6
    armijo_c: Annotated[float, Gt(0), Lt(1)] = 1e-4
    step_init: Annotated[float, Gt(0)] = 1e-2
    step_growth: Annotated[float, Gt(1)] = 2.0
    step_shrink: Annotated[float, Gt(0), Lt(1)] = 0.5
    max_halvings: Annotated[int, Ge(1)] = 60
    seed: Annotated[int, Ge(0)] = 0
