import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar

import numpy as np
from diwire import Injected
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from scipy.special import roots_legendre

from singular_ldg.core.bulk.constraints.quadrature import (
    MIN_QUADRATURE_ORDER,
    SQUARED_NODE_DECIMALS,
)
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.exceptions.quadrature_order import QuadratureOrderError
from singular_ldg.core.shared.arrays import FloatArray, IntArray
from singular_ldg.foundation.factory import BaseFactory

logger = logging.getLogger(__name__)


class QuadratureSettings(BaseSettings):
    """Margin-adapted quadrature refinement near the boundary of the physical set."""

    model_config = SettingsConfigDict(env_prefix="QUADRATURE_")

    resolution: float = Field(default=16.0, gt=0)
    max_order: int = Field(default=1024, ge=MIN_QUADRATURE_ORDER)


@dataclass(kw_only=True)
class SphereQuadratureFactory(BaseFactory):
    """Build Gauss-Legendre x uniform-azimuth product rules on the unit sphere."""

    QUADRATURE_ORDER_ERROR: ClassVar = QuadratureOrderError  # noqa: WPS115

    _settings: Injected[QuadratureSettings]

    def __call__(self, *, order: int) -> SphereQuadrature:
        """Return the rule with ``order`` polar and ``2 * order`` azimuthal points.

        Returns:
            A shared immutable quadrature rule.
        """
        if order < MIN_QUADRATURE_ORDER:
            raise self.QUADRATURE_ORDER_ERROR(order=order, minimum=MIN_QUADRATURE_ORDER)

        return _build_quadrature(order)

    def for_margin(self, *, order: int, margin: float) -> SphereQuadrature:
        """Return a rule fine enough for densities concentrated at the given margin.

        Orientation densities concentrate on a cap of angular width of order
        ``sqrt(margin)``; the polar order is raised to keep ``resolution`` nodes across it.

        Returns:
            The rule of order ``max(order, ceil(resolution / sqrt(margin)))``, capped.
        """
        adapted = order
        if margin > 0:
            adapted = max(order, math.ceil(self._settings.resolution / math.sqrt(margin)))

        adapted = min(adapted, max(order, self._settings.max_order))
        if adapted != order:
            logger.debug(
                "Raised quadrature order from %d to %d at margin %.3e",
                order,
                adapted,
                margin,
            )

        return self(order=adapted)


@lru_cache(maxsize=32)
def _build_quadrature(order: int) -> SphereQuadrature:
    cos_theta, polar_weights = roots_legendre(order)
    azimuths = np.pi * np.arange(2 * order) / order
    azimuth_weight = np.pi / order

    sin_theta = np.sqrt(1.0 - cos_theta**2)
    nodes = np.stack(
        [
            np.outer(sin_theta, np.cos(azimuths)).ravel(),
            np.outer(sin_theta, np.sin(azimuths)).ravel(),
            np.repeat(cos_theta, azimuths.size),
        ],
        axis=-1,
    )
    weights = np.repeat(polar_weights * azimuth_weight, azimuths.size)

    polar_squares, polar_index = _merge_squares(cos_theta**2)
    polar_merged = np.bincount(polar_index, weights=polar_weights)
    azimuth_squares, azimuth_index = _merge_squares(np.cos(azimuths) ** 2)
    azimuth_merged = azimuth_weight * np.bincount(azimuth_index)

    q = np.repeat(polar_squares, azimuth_squares.size)
    c = np.tile(azimuth_squares, polar_squares.size)
    squared_nodes = np.stack([(1.0 - q) * c, (1.0 - q) * (1.0 - c), q], axis=-1)
    squared_weights = np.outer(polar_merged, azimuth_merged).ravel()
    squared_products = (squared_nodes[:, :, np.newaxis] * squared_nodes[:, np.newaxis, :]).reshape(
        -1,
        9,
    )

    for array in (nodes, weights, squared_nodes, squared_weights, squared_products):
        array.setflags(write=False)

    logger.debug(
        "Built sphere quadrature of order %d: %d nodes, %d squared nodes",
        order,
        weights.size,
        squared_weights.size,
    )
    return SphereQuadrature(
        order=order,
        nodes=nodes,
        weights=weights,
        squared_nodes=squared_nodes,
        squared_weights=squared_weights,
        squared_products=squared_products,
    )


def _merge_squares(values: FloatArray) -> tuple[FloatArray, IntArray]:
    _, first_index, inverse = np.unique(
        np.round(values, SQUARED_NODE_DECIMALS),
        return_index=True,
        return_inverse=True,
    )
    return values[first_index], inverse.ravel()
