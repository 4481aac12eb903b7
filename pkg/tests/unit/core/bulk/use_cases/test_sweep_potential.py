import numpy as np
import pytest

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.services.uniaxial_profile import UniaxialProfileService
from singular_ldg.core.bulk.use_cases.sweep_potential import SweepPotentialUseCase


def test_sweep_potential_samples_evenly_spaced_points(
    profile_service: UniaxialProfileService,
) -> None:
    use_case = SweepPotentialUseCase(_profile_service=profile_service)

    samples = use_case.execute(s_min=-0.2, s_max=0.6, steps=5, params=BulkParams())

    assert [sample.s for sample in samples] == pytest.approx([-0.2, 0.0, 0.2, 0.4, 0.6])
    assert samples[1].f_ms == pytest.approx(-np.log(4.0 * np.pi), abs=1e-12)
    assert all(np.isfinite(sample.f_ms) for sample in samples)


def test_sweep_potential_reports_boundary_points_as_infinite(
    profile_service: UniaxialProfileService,
) -> None:
    use_case = SweepPotentialUseCase(_profile_service=profile_service)

    samples = use_case.execute(s_min=0.5, s_max=1.0, steps=3, params=BulkParams())

    assert np.isfinite(samples[0].f_ms)
    assert np.isfinite(samples[1].f_ms)
    assert samples[2].f_ms == np.inf
    assert samples[2].psi_b == np.inf
    assert samples[2].margin == pytest.approx(0.0, abs=1e-15)
