import logging
from dataclasses import dataclass, field as dataclass_field
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.energy.services.energy_assembler import EnergyAssemblerService
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.minimizer.constraints.step_bounds import (
    BB_STEP_LOWER,
    BB_STEP_UPPER,
    MIN_STEP_FRACTION,
    PROGRESS_LOG_INTERVAL,
)
from singular_ldg.core.minimizer.constraints.termination import Termination
from singular_ldg.core.minimizer.dtos.solver_options import SolverOptions
from singular_ldg.core.minimizer.entities.iterate import Iterate
from singular_ldg.core.minimizer.entities.minimization_result import MinimizationResult
from singular_ldg.core.minimizer.entities.solve_report import SolveReport
from singular_ldg.core.minimizer.entities.step_trial import StepTrial
from singular_ldg.core.minimizer.exceptions.infeasible_initial_field import (
    InfeasibleInitialFieldError,
)
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class _Trace:
    energy: list[float] = dataclass_field(default_factory=list)
    grad_norm: list[float] = dataclass_field(default_factory=list)
    step: list[float] = dataclass_field(default_factory=list)
    margin: list[float] = dataclass_field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.energy) - 1

    def record(self, *, iterate: Iterate, step: float) -> None:
        self.energy.append(iterate.energy)
        self.grad_norm.append(iterate.grad_norm)
        self.step.append(step)
        self.margin.append(iterate.margin)


@dataclass(kw_only=True)
class ArmijoDescentService(BaseService):
    """Gradient descent with Armijo backtracking on the discrete energy.

    The search direction is the negative mass-normalized gradient, which vanishes
    on the boundary ring, so Dirichlet data never move. Trial points outside the
    evaluable region have infinite energy and are rejected like any other failed
    Armijo test. Initial steps follow the Barzilai-Borwein rule ``s.s / s.y``
    clamped relative to ``step_init``; when the rule is undefined the previous
    accepted step is grown instead.
    """

    INFEASIBLE_INITIAL_FIELD_ERROR: ClassVar = InfeasibleInitialFieldError  # noqa: WPS115

    _assembler: Injected[EnergyAssemblerService]

    def minimize(
        self,
        *,
        field: Field,
        bulk: BulkParams,
        constants: ElasticConstants,
        options: SolverOptions,
    ) -> MinimizationResult:
        """Descend from ``field`` until the gradient tolerance is met or progress stops.

        Returns:
            The last accepted iterate and the run history.
        """
        evaluation = self._assembler.evaluate(field=field, bulk=bulk, constants=constants)
        if evaluation.gradient is None:
            raise self.INFEASIBLE_INITIAL_FIELD_ERROR(cell=evaluation.breakdown.infeasible_cell)

        iterate = Iterate(field=field, evaluation=evaluation, gradient=evaluation.gradient)
        previous: Iterate | None = None
        trace = _Trace()
        trace.record(iterate=iterate, step=0.0)
        step = options.step_init

        while True:
            if iterate.grad_norm <= options.grad_tol:
                termination = Termination.CONVERGED
                break
            if trace.iterations >= options.max_iters:
                termination = Termination.MAX_ITERS
                break

            step = _initial_step(current=iterate, previous=previous, step=step, options=options)
            trial = self._backtrack(
                iterate=iterate,
                step=step,
                bulk=bulk,
                constants=constants,
                options=options,
            )
            if trial.iterate is None:
                termination = Termination.STALLED
                break

            previous, iterate, step = iterate, trial.iterate, trial.step
            trace.record(iterate=iterate, step=step)
            if trace.iterations % PROGRESS_LOG_INTERVAL == 0:
                logger.debug(
                    "Iteration %d: energy=%.12g grad_norm=%.3e step=%.3e margin=%.3e",
                    trace.iterations,
                    iterate.energy,
                    iterate.grad_norm,
                    step,
                    iterate.margin,
                )

        report = SolveReport(
            iterations=trace.iterations,
            termination=termination,
            energy_trace=tuple(trace.energy),
            grad_norm_trace=tuple(trace.grad_norm),
            step_trace=tuple(trace.step),
            margin_trace=tuple(trace.margin),
        )
        logger.info(
            "Descent %s after %d iterations: energy=%.12g grad_norm=%.3e margin=%.3e",
            termination,
            report.iterations,
            report.final_energy,
            report.final_grad_norm,
            report.final_margin,
        )
        return MinimizationResult(field=iterate.field, report=report)

    def step_trial(
        self,
        *,
        iterate: Iterate,
        direction: FloatArray,
        step: float,
        bulk: BulkParams,
        constants: ElasticConstants,
        armijo_c: float,
    ) -> StepTrial:
        """Evaluate ``field + step * direction`` and apply the Armijo test.

        ``step <= 0`` is rejected without evaluation. The test is
        ``E(trial) <= E + armijo_c * step * <grad E, direction>``; infeasible trials
        have infinite energy and fail it.

        Returns:
            The trial, carrying the new iterate when accepted.
        """
        if step <= 0:
            return StepTrial(step=step, energy=np.inf)

        trial_field = iterate.field.with_values(iterate.field.values + step * direction)
        evaluation = self._assembler.evaluate(
            field=trial_field,
            bulk=bulk,
            constants=constants,
            warm_start=iterate.evaluation.lambdas,
        )
        energy = evaluation.breakdown.total
        slope = float(np.sum(iterate.gradient * direction))
        sufficient_decrease = energy <= iterate.energy + armijo_c * step * slope
        if evaluation.gradient is None or not sufficient_decrease:
            return StepTrial(step=step, energy=energy)

        return StepTrial(
            step=step,
            energy=energy,
            iterate=Iterate(field=trial_field, evaluation=evaluation, gradient=evaluation.gradient),
        )

    def _backtrack(
        self,
        *,
        iterate: Iterate,
        step: float,
        bulk: BulkParams,
        constants: ElasticConstants,
        options: SolverOptions,
    ) -> StepTrial:
        direction = -iterate.normalized_gradient
        min_step = MIN_STEP_FRACTION * options.step_init
        trial = StepTrial(step=step, energy=np.inf)
        for _ in range(options.max_halvings):
            if step < min_step:
                break

            trial = self.step_trial(
                iterate=iterate,
                direction=direction,
                step=step,
                bulk=bulk,
                constants=constants,
                armijo_c=options.armijo_c,
            )
            if trial.accepted:
                return trial

            step *= options.step_shrink

        logger.debug(
            "No Armijo decrease down to step %.3e at energy %.12g",
            trial.step,
            iterate.energy,
        )
        return trial


def _initial_step(
    *,
    current: Iterate,
    previous: Iterate | None,
    step: float,
    options: SolverOptions,
) -> float:
    if previous is None:
        return options.step_init

    displacement = current.field.values - previous.field.values
    change = current.normalized_gradient - previous.normalized_gradient
    curvature = float(np.sum(displacement * change))
    candidate = step * options.step_growth
    if curvature > 0:
        candidate = float(np.sum(displacement**2)) / curvature

    return float(
        np.clip(
            candidate,
            BB_STEP_LOWER * options.step_init,
            BB_STEP_UPPER * options.step_init,
        ),
    )
