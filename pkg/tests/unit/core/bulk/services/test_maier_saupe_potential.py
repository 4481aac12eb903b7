import numpy as np
import pytest
from scipy.spatial.transform import Rotation

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.factories.sphere_quadrature import SphereQuadratureFactory
from singular_ldg.core.bulk.services.maier_saupe_potential import MaierSaupePotentialService
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService

_LOG_SPHERE_AREA = np.log(4.0 * np.pi)


def _random_feasible_values(
    algebra: QTensorAlgebraService,
    *,
    count: int,
    min_margin: float,
    seed: int,
) -> np.ndarray:
    rng = np.random.default_rng(seed)
    values = rng.uniform(-0.45, 0.45, size=(20 * count, 5))
    margins = algebra.margins(values=values)
    return values[margins >= min_margin][:count]


def _primal_entropy(
    algebra: QTensorAlgebraService,
    *,
    values: np.ndarray,
    quadrature: SphereQuadrature,
) -> float:
    # Minimize sum_n w_n rho_n log rho_n over positive node densities with the
    # normalization and second-moment constraints, by infeasible-start Newton.
    weights = quadrature.weights
    outer = quadrature.nodes[:, :, np.newaxis] * quadrature.nodes[:, np.newaxis, :]
    features = np.column_stack([np.ones(weights.size), algebra.from_matrix(matrix=outer)])
    constraints = features.T * weights
    target = np.concatenate([[1.0], values])
    rho = np.full(weights.size, 1.0 / weights.sum())

    for _ in range(200):
        gradient = weights * (np.log(rho) + 1.0)
        inverse_hessian = rho / weights
        residual = constraints @ rho - target
        schur = (constraints * inverse_hessian) @ constraints.T
        multiplier = np.linalg.solve(schur, residual - constraints @ (inverse_hessian * gradient))
        step = -inverse_hessian * (gradient + constraints.T @ multiplier)
        length = 1.0
        while np.any(rho + length * step <= 0):
            length *= 0.5

        rho += length * step
        decrement = float(step @ (weights / rho * step))
        if length == 1.0 and decrement < 1e-24 and np.abs(residual).max() < 1e-13:
            break

    return float(weights @ (rho * np.log(rho)))


def test_f_ms_of_isotropic_state_is_minus_log_sphere_area(
    potential: MaierSaupePotentialService,
    quadrature: SphereQuadrature,
) -> None:
    value = potential.f_ms(q=QTensor.zero(), quadrature=quadrature)
    gradient = potential.grad_f_ms(q=QTensor.zero(), quadrature=quadrature)

    assert value == pytest.approx(-_LOG_SPHERE_AREA, abs=1e-8)
    np.testing.assert_allclose(gradient.components, 0.0, atol=1e-8)


def test_f_ms_is_rotation_invariant(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    rng = np.random.default_rng(8)
    q = QTensor.of(_random_feasible_values(algebra, count=1, min_margin=0.05, seed=8)[0])
    reference = potential.f_ms(q=q, quadrature=quadrature)

    for rotation in Rotation.from_quat(rng.normal(size=(10, 4))).as_matrix():
        rotated = algebra.rotate(q=q, rotation=rotation)

        assert potential.f_ms(q=rotated, quadrature=quadrature) == pytest.approx(
            reference,
            abs=1e-10,
        )


def test_grad_f_ms_matches_central_differences(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    step = 1e-5
    for values in _random_feasible_values(algebra, count=100, min_margin=0.05, seed=4):
        analytic = potential.grad_f_ms(q=QTensor.of(values), quadrature=quadrature).components
        numeric = np.array(
            [
                (
                    potential.f_ms(q=QTensor.of(values + step * direction), quadrature=quadrature)
                    - potential.f_ms(q=QTensor.of(values - step * direction), quadrature=quadrature)
                )
                / (2.0 * step)
                for direction in np.eye(5)
            ],
        )

        assert np.linalg.norm(analytic - numeric) <= 1e-5 * max(np.linalg.norm(analytic), 1.0)


def test_grad_f_ms_of_uniaxial_tensor_is_uniaxial_about_the_same_axis(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    director = np.array([1.0, 2.0, 2.0]) / 3.0
    q = algebra.uniaxial(s=0.5, director=director)
    unit = algebra.uniaxial(s=1.0, director=director).components

    gradient = potential.grad_f_ms(q=q, quadrature=quadrature).components
    scale = gradient @ unit / (unit @ unit)

    assert scale > 0
    np.testing.assert_allclose(gradient, scale * unit, atol=1e-10)


def test_f_ms_is_stable_under_quadrature_refinement(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature_factory: SphereQuadratureFactory,
) -> None:
    coarse = quadrature_factory(order=32)
    fine = quadrature_factory(order=64)

    for values in _random_feasible_values(algebra, count=20, min_margin=0.05, seed=9):
        q = QTensor.of(values)

        assert potential.f_ms(q=q, quadrature=coarse) == pytest.approx(
            potential.f_ms(q=q, quadrature=fine),
            abs=1e-9,
        )


def test_f_ms_agrees_with_primal_entropy_minimization(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    for values in _random_feasible_values(algebra, count=10, min_margin=0.05, seed=17):
        dual = potential.f_ms(q=QTensor.of(values), quadrature=quadrature)
        primal = _primal_entropy(algebra, values=values, quadrature=quadrature)

        assert dual == pytest.approx(primal, abs=1e-4)


def test_f_ms_uniaxial_value_matches_primal_entropy_minimization(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    q = algebra.uniaxial(s=0.5, director=[0.0, 0.0, 1.0])

    dual = potential.f_ms(q=q, quadrature=quadrature)
    primal = _primal_entropy(algebra, values=q.components, quadrature=quadrature)

    assert dual == pytest.approx(primal, abs=1e-4)


def test_f_ms_is_midpoint_convex(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    values = _random_feasible_values(algebra, count=200, min_margin=0.05, seed=31)
    first, second = values[:100], values[100:]

    for a, b in zip(first, second, strict=True):
        midpoint = potential.f_ms(q=QTensor.of(0.5 * (a + b)), quadrature=quadrature)
        chord = 0.5 * (
            potential.f_ms(q=QTensor.of(a), quadrature=quadrature)
            + potential.f_ms(q=QTensor.of(b), quadrature=quadrature)
        )

        assert midpoint <= chord + 1e-9


def test_psi_b_of_isotropic_state(potential: MaierSaupePotentialService) -> None:
    params = BulkParams(T=2.0, kappa=3.0)

    assert potential.psi_b(q=QTensor.zero(), params=params) == pytest.approx(
        -2.0 * _LOG_SPHERE_AREA,
        abs=1e-8,
    )
    np.testing.assert_allclose(
        potential.grad_psi_b(q=QTensor.zero(), params=params).components,
        0.0,
        atol=1e-8,
    )


def test_grad_psi_b_combines_entropy_and_quadratic_parts(
    potential: MaierSaupePotentialService,
    quadrature: SphereQuadrature,
) -> None:
    params = BulkParams(T=1.5, kappa=0.75)
    q = QTensor.of([0.05, -0.1, 0.08, 0.02, -0.04])

    entropy_gradient = potential.grad_f_ms(q=q, quadrature=quadrature).components

    np.testing.assert_allclose(
        potential.grad_psi_b(q=q, params=params).components,
        1.5 * entropy_gradient - 1.5 * q.components,
        atol=1e-12,
    )


def test_psi_b_plus_quadratic_is_midpoint_convex(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
) -> None:
    params = BulkParams(T=1.0, kappa=5.0)
    values = _random_feasible_values(algebra, count=40, min_margin=0.05, seed=41)

    def shifted(v: np.ndarray) -> float:
        return potential.psi_b(q=QTensor.of(v), params=params) + params.kappa * float(v @ v)

    for a, b in zip(values[:20], values[20:], strict=True):
        assert shifted(0.5 * (a + b)) <= 0.5 * (shifted(a) + shifted(b)) + 1e-9


def test_f_ms_raises_near_the_boundary(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    q = algebra.uniaxial(s=1.0 - 1e-7, director=[0.0, 0.0, 1.0])

    with pytest.raises(MaierSaupePotentialService.NEAR_BOUNDARY_ERROR):
        potential.f_ms(q=q, quadrature=quadrature)


def test_evaluate_batch_matches_single_point_evaluation_and_flags_infeasible_rows(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    values = _random_feasible_values(algebra, count=5, min_margin=0.05, seed=2)
    outside = algebra.uniaxial(s=1.2, director=[1.0, 0.0, 0.0]).components
    batch = np.vstack([values, outside])

    evaluation = potential.evaluate_batch(values=batch, quadrature=quadrature)

    assert evaluation.feasible.tolist() == [True] * 5 + [False]
    assert not evaluation.all_feasible
    assert evaluation.entropy[-1] == np.inf
    assert np.isnan(evaluation.gradient[-1]).all()
    for row, v in enumerate(values):
        q = QTensor.of(v)

        assert evaluation.entropy[row] == pytest.approx(
            potential.f_ms(q=q, quadrature=quadrature),
            abs=1e-12,
        )
        np.testing.assert_allclose(
            evaluation.gradient[row],
            potential.grad_f_ms(q=q, quadrature=quadrature).components,
            atol=1e-9,
        )


def test_evaluate_batch_accepts_warm_start(
    potential: MaierSaupePotentialService,
    algebra: QTensorAlgebraService,
    quadrature: SphereQuadrature,
) -> None:
    values = _random_feasible_values(algebra, count=8, min_margin=0.05, seed=3)
    cold = potential.evaluate_batch(values=values, quadrature=quadrature)

    warm = potential.evaluate_batch(values=values, quadrature=quadrature, warm_start=cold.lambdas)

    np.testing.assert_allclose(warm.entropy, cold.entropy, atol=1e-12)
