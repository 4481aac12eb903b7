import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
import numpy.typing as npt
from diwire import Injected
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from singular_ldg.core.bulk.entities.log_partition import LogPartition
from singular_ldg.core.bulk.entities.multiplier_solution import MultiplierSolution
from singular_ldg.core.bulk.entities.multipliers import Multipliers
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.exceptions.moment_inversion import MomentInversionError
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.qtensor.constraints.physical_set import (
    EIGENVALUE_LOWER_BOUND,
    EIGENVALUE_UPPER_BOUND,
    ISOTROPIC_SECOND_MOMENT,
)
from singular_ldg.core.shared.arrays import BoolArray, FloatArray, IntArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)

# Orthonormal basis of the plane sum(lambda) = 0.
_REDUCED_BASIS = np.array(
    [
        [1.0 / np.sqrt(2.0), 1.0 / np.sqrt(6.0)],
        [-1.0 / np.sqrt(2.0), 1.0 / np.sqrt(6.0)],
        [0.0, -2.0 / np.sqrt(6.0)],
    ],
)


class MomentInversionSettings(BaseSettings):
    """Newton controls for matching second moments with exponential-family densities."""

    model_config = SettingsConfigDict(env_prefix="MOMENT_INVERSION_")

    feasibility_floor: float = Field(default=1e-6, gt=0)
    tolerance: float = Field(default=1e-12, gt=0)
    stagnation_tolerance: float = Field(default=1e-10, gt=0)
    max_iterations: int = Field(default=100, ge=1)
    max_halvings: int = Field(default=50, ge=1)


@dataclass(frozen=True, kw_only=True, slots=True)
class _NewtonState:
    lambdas: FloatArray
    log_z: FloatArray
    residual: FloatArray
    covariance: FloatArray

    def rows(self, index: IntArray) -> "_NewtonState":
        return _NewtonState(
            lambdas=self.lambdas[index],
            log_z=self.log_z[index],
            residual=self.residual[index],
            covariance=self.covariance[index],
        )

    def update(self, index: IntArray, other: "_NewtonState") -> None:
        self.lambdas[index] = other.lambdas
        self.log_z[index] = other.log_z
        self.residual[index] = other.residual
        self.covariance[index] = other.covariance


@dataclass(kw_only=True)
class MomentInversionService(BaseService):
    """Find multipliers whose orientation density has prescribed second moments.

    The density ``exp(sum_i lambda_i p_i^2) / Z`` is sought in the eigenframe of the
    target tensor, so only the three eigenvalues matter. The dual problem is convex in
    ``lambda``; its gradient is the moment residual and its Hessian the covariance of
    the squared coordinates, which is singular along ``(1, 1, 1)``. Newton steps are
    therefore taken in the plane ``sum(lambda) = 0``.
    """

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115
    MOMENT_INVERSION_ERROR: ClassVar = MomentInversionError  # noqa: WPS115

    _settings: Injected[MomentInversionSettings]

    @property
    def feasibility_floor(self) -> float:
        """Margin below which tensors are reported infeasible.

        Returns:
            The configured floor.
        """
        return self._settings.feasibility_floor

    def log_partition(
        self,
        *,
        lambdas: npt.ArrayLike,
        quadrature: SphereQuadrature,
    ) -> LogPartition:
        """Evaluate ``log Z``, the moments ``<p_i^2>`` and their covariance.

        Returns:
            The log-partition value with its gradient and Hessian in ``lambda``.
        """
        log_z, moments, covariance = self.log_partition_batch(
            lambdas=np.asarray(lambdas, dtype=np.float64)[np.newaxis, :],
            quadrature=quadrature,
        )
        return LogPartition(log_z=float(log_z[0]), moments=moments[0], covariance=covariance[0])

    def log_partition_batch(
        self,
        *,
        lambdas: FloatArray,
        quadrature: SphereQuadrature,
    ) -> tuple[FloatArray, FloatArray, FloatArray]:
        """Vectorized :meth:`log_partition` over rows of ``lambdas``.

        The exponent is shifted by ``max(lambda)``; since ``sum_i p_i^2 = 1`` every
        shifted exponent is non-positive.

        Returns:
            ``log Z`` ``(n,)``, moments ``(n, 3)`` and covariances ``(n, 3, 3)``.
        """
        shift = lambdas.max(axis=-1, keepdims=True)
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            weighted = np.exp(lambdas @ quadrature.squared_nodes.T - shift)
            weighted *= quadrature.squared_weights
            z = weighted.sum(axis=-1)
            log_z = np.log(z) + shift[:, 0]
            moments = weighted @ quadrature.squared_nodes / z[:, np.newaxis]
            second = (weighted @ quadrature.squared_products / z[:, np.newaxis]).reshape(-1, 3, 3)
            covariance = second - moments[:, :, np.newaxis] * moments[:, np.newaxis, :]

        return log_z, moments, covariance

    def solve_multipliers(
        self,
        *,
        eigenvalues: npt.ArrayLike,
        quadrature: SphereQuadrature,
        initial: npt.ArrayLike | None = None,
    ) -> Multipliers:
        """Invert one ascending spectrum.

        Returns:
            Multipliers in the eigenframe, so ``frame`` is the identity.
        """
        targets = np.asarray(eigenvalues, dtype=np.float64)
        margin = float(
            min(targets[0] - EIGENVALUE_LOWER_BOUND, EIGENVALUE_UPPER_BOUND - targets[-1]),
        )
        if margin < self._settings.feasibility_floor:
            raise self.NEAR_BOUNDARY_ERROR(margin=margin, floor=self._settings.feasibility_floor)

        warm_start: FloatArray | None = None
        if initial is not None:
            warm_start = np.asarray(initial, dtype=np.float64)[np.newaxis, :]

        solution = self.solve_batch(
            targets=targets[np.newaxis, :],
            quadrature=quadrature,
            initial=warm_start,
        )
        if not solution.converged[0]:
            raise self.MOMENT_INVERSION_ERROR(
                residual=float(solution.residual[0]),
                iterations=int(solution.iterations[0]),
            )

        return Multipliers(
            lambdas=solution.lambdas[0],
            frame=np.eye(3),
            log_z=float(solution.log_z[0]),
            iterations=int(solution.iterations[0]),
        )

    def solve_batch(
        self,
        *,
        targets: FloatArray,
        quadrature: SphereQuadrature,
        initial: FloatArray | None = None,
    ) -> MultiplierSolution:
        """Run damped Newton iterations for every row of ``targets``.

        Rows must lie inside the physical set. Non-finite rows of ``initial`` fall back
        to the closed-form starting guess.

        Returns:
            Multipliers, convergence flags and iteration counts per row.
        """
        second_moments = targets + ISOTROPIC_SECOND_MOMENT
        lambdas = self._starting_point(second_moments=second_moments, initial=initial)
        log_z, moments, covariance = self.log_partition_batch(
            lambdas=lambdas,
            quadrature=quadrature,
        )
        state = _NewtonState(
            lambdas=lambdas,
            log_z=log_z,
            residual=moments - second_moments,
            covariance=covariance,
        )
        converged = _max_abs(state.residual) <= self._settings.tolerance
        failed = np.zeros_like(converged)
        iterations = np.zeros(targets.shape[0], dtype=np.int64)

        for _ in range(self._settings.max_iterations):
            active = np.flatnonzero(~converged & ~failed)
            if active.size == 0:
                break

            stepped, stalled = self._newton_step(
                state=state.rows(active),
                second_moments=second_moments[active],
                quadrature=quadrature,
            )
            state.update(active, stepped)
            iterations[active] += 1

            active_residual = _max_abs(stepped.residual)
            converged[active] = active_residual <= self._settings.tolerance
            converged[active[stalled]] |= (
                active_residual[stalled] <= self._settings.stagnation_tolerance
            )
            failed[active] = stalled & ~converged[active]

        if not converged.all():
            logger.debug(
                "Moment inversion left %d of %d rows unconverged",
                int((~converged).sum()),
                converged.size,
            )

        return MultiplierSolution(
            lambdas=state.lambdas,
            log_z=state.log_z,
            residual=_max_abs(state.residual),
            converged=converged,
            iterations=iterations,
        )

    def _starting_point(
        self,
        *,
        second_moments: FloatArray,
        initial: FloatArray | None,
    ) -> FloatArray:
        # Exact for densities concentrated near a great circle or a pole, zero when isotropic.
        guess = -0.5 / second_moments
        guess -= guess.mean(axis=-1, keepdims=True)
        if initial is None:
            return guess

        usable = np.isfinite(initial).all(axis=-1)
        warm = initial - initial.mean(axis=-1, keepdims=True)
        return np.where(usable[:, np.newaxis], warm, guess)

    def _newton_step(
        self,
        *,
        state: _NewtonState,
        second_moments: FloatArray,
        quadrature: SphereQuadrature,
    ) -> tuple[_NewtonState, BoolArray]:
        direction = _reduced_newton_direction(covariance=state.covariance, residual=state.residual)
        current_norm = np.linalg.norm(state.residual, axis=-1)

        stepped = state.rows(np.arange(current_norm.size))
        step = np.ones(current_norm.size)
        pending = np.isfinite(direction).all(axis=-1)
        stalled = ~pending

        for _ in range(self._settings.max_halvings):
            rows = np.flatnonzero(pending)
            if rows.size == 0:
                break

            trial = state.lambdas[rows] + step[rows, np.newaxis] * direction[rows]
            log_z, moments, covariance = self.log_partition_batch(
                lambdas=trial,
                quadrature=quadrature,
            )
            residual = moments - second_moments[rows]
            accepted = (
                np.isfinite(log_z)
                & np.isfinite(covariance).all(axis=(-2, -1))
                & (np.linalg.norm(residual, axis=-1) < current_norm[rows])
            )
            stepped.update(
                rows[accepted],
                _NewtonState(
                    lambdas=trial[accepted],
                    log_z=log_z[accepted],
                    residual=residual[accepted],
                    covariance=covariance[accepted],
                ),
            )
            pending[rows[accepted]] = False
            step[rows[~accepted]] *= 0.5

        stalled |= pending
        return stepped, stalled


def _reduced_newton_direction(*, covariance: FloatArray, residual: FloatArray) -> FloatArray:
    with np.errstate(over="ignore", invalid="ignore"):
        return _solve_reduced_system(covariance=covariance, residual=residual)


def _solve_reduced_system(*, covariance: FloatArray, residual: FloatArray) -> FloatArray:
    hessian = np.einsum("ia,nij,jb->nab", _REDUCED_BASIS, covariance, _REDUCED_BASIS)
    gradient = residual @ _REDUCED_BASIS
    determinant = hessian[:, 0, 0] * hessian[:, 1, 1] - hessian[:, 0, 1] * hessian[:, 1, 0]
    valid = np.isfinite(determinant) & (determinant > 0)
    safe_determinant = np.where(valid, determinant, 1.0)

    reduced = np.stack(
        [
            hessian[:, 1, 1] * gradient[:, 0] - hessian[:, 0, 1] * gradient[:, 1],
            hessian[:, 0, 0] * gradient[:, 1] - hessian[:, 1, 0] * gradient[:, 0],
        ],
        axis=-1,
    ) / safe_determinant[:, np.newaxis]
    direction = -reduced @ _REDUCED_BASIS.T
    direction[~valid] = np.nan
    return direction


def _max_abs(residual: FloatArray) -> FloatArray:
    with np.errstate(invalid="ignore"):
        return np.where(np.isfinite(residual).all(axis=-1), np.abs(residual).max(axis=-1), np.inf)
