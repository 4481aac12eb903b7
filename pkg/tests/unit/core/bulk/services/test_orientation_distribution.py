import numpy as np
import pytest

from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.services.maier_saupe_potential import MaierSaupePotentialService
from singular_ldg.core.bulk.services.orientation_distribution import (
    OrientationDistributionService,
)
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService


@pytest.fixture()
def distribution(algebra: QTensorAlgebraService) -> OrientationDistributionService:
    return OrientationDistributionService(_algebra=algebra)


def test_density_is_normalized_and_reproduces_the_order_tensor(
    distribution: OrientationDistributionService,
    potential: MaierSaupePotentialService,
    quadrature: SphereQuadrature,
) -> None:
    q = QTensor.of([0.12, -0.05, 0.09, -0.03, 0.07])
    multipliers = potential.multipliers(q=q, quadrature=quadrature)

    rho = distribution.density(multipliers=multipliers, directions=quadrature.nodes)
    order_tensor = distribution.order_tensor(multipliers=multipliers, quadrature=quadrature)

    assert np.all(rho > 0)
    assert quadrature.weights @ rho == pytest.approx(1.0, abs=1e-10)
    np.testing.assert_allclose(order_tensor.components, q.components, atol=1e-9)


def test_density_of_isotropic_state_is_uniform(
    distribution: OrientationDistributionService,
    potential: MaierSaupePotentialService,
    quadrature: SphereQuadrature,
) -> None:
    multipliers = potential.multipliers(q=QTensor.zero(), quadrature=quadrature)

    rho = distribution.density(multipliers=multipliers, directions=np.eye(3))

    np.testing.assert_allclose(rho, 1.0 / (4.0 * np.pi), rtol=1e-12)


def test_density_is_antipodally_symmetric(
    distribution: OrientationDistributionService,
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    multipliers = potential.multipliers(
        q=algebra.uniaxial(s=0.4, director=[0.0, 0.6, 0.8]),
        quadrature=quadrature,
    )
    directions = np.array([[0.0, 0.6, 0.8], [1.0, 0.0, 0.0]])

    forward = distribution.density(multipliers=multipliers, directions=directions)
    backward = distribution.density(multipliers=multipliers, directions=-directions)

    np.testing.assert_allclose(forward, backward, rtol=1e-14)
    assert forward[0] > forward[1]
