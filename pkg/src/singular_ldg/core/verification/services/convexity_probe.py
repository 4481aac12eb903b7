import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.factories.sphere_quadrature import SphereQuadratureFactory
from singular_ldg.core.bulk.services.maier_saupe_potential import MaierSaupePotentialService
from singular_ldg.core.elastic.constraints.invariants import PHYSICAL_BOX_HALF_WIDTH
from singular_ldg.core.qtensor.constraints.physical_set import S0_DIMENSION
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.core.verification.constraints.thresholds import (
    DIVIDED_DIFFERENCE_POINTS,
    DIVIDED_DIFFERENCE_S_MAX,
    DIVIDED_DIFFERENCE_S_MIN,
)
from singular_ldg.core.verification.entities.convexity_report import ConvexityReport
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)

_LADDER_DIRECTOR = np.array([0.0, 0.0, 1.0])
_LARGEST_MARGIN = 1.0 / 3.0


@dataclass(kw_only=True)
class ConvexityProbeService(BaseService):
    """Randomized midpoint tests of ``f_ms`` and of ``psi_b + kappa |Q|^2``.

    All evaluations use the fixed quadrature of order ``bulk.quad_order``. The
    discrete potential is then exactly convex, so any violation above rounding
    points at a defect in the moment inversion.
    """

    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]
    _potential: Injected[MaierSaupePotentialService]
    _quadrature_factory: Injected[SphereQuadratureFactory]

    def convexity_probe(
        self,
        *,
        samples: int,
        margin_floor: float,
        seed: int,
        bulk: BulkParams,
    ) -> ConvexityReport:
        """Test ``samples`` random pairs with margins at least ``margin_floor``.

        Returns:
            The worst midpoint, semiconvex and divided-difference violations.
        """
        if samples <= 0:
            raise self.INVALID_PROBE_ERROR(reason="samples must be positive")
        if not 0 < margin_floor < _LARGEST_MARGIN:
            raise self.INVALID_PROBE_ERROR(reason="margin floor must lie in (0, 1/3)")

        rng = np.random.default_rng(seed)
        first = self.sample_feasible(rng=rng, count=samples, margin_floor=margin_floor)
        second = self.sample_feasible(rng=rng, count=samples, margin_floor=margin_floor)
        midpoint, semiconvex = self.midpoint_violations(first=first, second=second, bulk=bulk)

        report = ConvexityReport(
            samples=samples,
            margin_floor=margin_floor,
            worst_midpoint=float(midpoint.max()),
            worst_semiconvex=float(semiconvex.max()),
            worst_divided_difference=self.divided_difference_violation(bulk=bulk),
        )
        logger.info(
            "Convexity probe over %d pairs: midpoint=%.3e semiconvex=%.3e ladder=%.3e",
            samples,
            report.worst_midpoint,
            report.worst_semiconvex,
            report.worst_divided_difference,
        )
        return report

    def midpoint_violations(
        self,
        *,
        first: FloatArray,
        second: FloatArray,
        bulk: BulkParams,
    ) -> tuple[FloatArray, FloatArray]:
        """Midpoint defects of ``f_ms`` and of ``psi_b + kappa |Q|^2`` for each pair.

        Returns:
            ``(f(mid) - (f(a) + f(b)) / 2, g(mid) - (g(a) + g(b)) / 2)`` per pair.
        """
        midpoint = 0.5 * (first + second)
        stacked = np.concatenate([first, second, midpoint], axis=0)
        quadrature = self._quadrature_factory(order=bulk.quad_order)
        f_ms = self._entropy(values=stacked, quadrature=quadrature)
        squared = np.einsum("ni,ni->n", stacked, stacked)
        psi_b = bulk.temperature * f_ms - bulk.kappa * squared
        shifted = psi_b + 0.5 * bulk.semiconvexity_constant * squared

        f_first, f_second, f_mid = np.split(f_ms, 3)
        g_first, g_second, g_mid = np.split(shifted, 3)
        return f_mid - 0.5 * (f_first + f_second), g_mid - 0.5 * (g_first + g_second)

    def divided_difference_violation(self, *, bulk: BulkParams) -> float:
        """Largest decrease between consecutive slopes of ``f_ms`` on the uniaxial ladder.

        Returns:
            A non-positive value when the slopes never decrease.
        """
        s_values = np.linspace(
            DIVIDED_DIFFERENCE_S_MIN,
            DIVIDED_DIFFERENCE_S_MAX,
            DIVIDED_DIFFERENCE_POINTS,
        )
        ladder = self._algebra.uniaxial_batch(
            s=1.0,
            directors=np.tile(_LADDER_DIRECTOR, (DIVIDED_DIFFERENCE_POINTS, 1)),
        )
        f_ms = self._entropy(
            values=s_values[:, np.newaxis] * ladder,
            quadrature=self._quadrature_factory(order=bulk.quad_order),
        )
        slopes = np.diff(f_ms) / np.diff(s_values)
        return float(np.max(slopes[:-1] - slopes[1:]))

    def sample_feasible(
        self,
        *,
        rng: np.random.Generator,
        count: int,
        margin_floor: float,
    ) -> FloatArray:
        """Draw coordinates uniformly from the tensors with margin at least ``margin_floor``.

        Returns:
            Coordinates ``(count, 5)``.
        """
        accepted: list[FloatArray] = []
        remaining = count
        while remaining > 0:
            candidates = rng.uniform(
                -PHYSICAL_BOX_HALF_WIDTH,
                PHYSICAL_BOX_HALF_WIDTH,
                size=(8 * remaining + 16, S0_DIMENSION),
            )
            margins = self._algebra.margins(values=candidates)
            inside = candidates[margins >= margin_floor][:remaining]
            accepted.append(inside)
            remaining -= inside.shape[0]

        return np.concatenate(accepted, axis=0)

    def _entropy(self, *, values: FloatArray, quadrature: SphereQuadrature) -> FloatArray:
        evaluation = self._potential.evaluate_batch(values=values, quadrature=quadrature)
        if not evaluation.all_feasible:
            failed = int(np.count_nonzero(~evaluation.feasible))
            raise self.INVALID_PROBE_ERROR(
                reason=(
                    f"{failed} probe points could not be evaluated with quadrature order "
                    f"{quadrature.order}; raise the margin floor or the order"
                ),
            )

        return evaluation.entropy
