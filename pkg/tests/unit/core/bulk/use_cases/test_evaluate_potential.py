import numpy as np
import pytest

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.services.uniaxial_profile import UniaxialProfileService
from singular_ldg.core.bulk.use_cases.evaluate_potential import EvaluatePotentialUseCase


def test_evaluate_potential_isotropic_state(profile_service: UniaxialProfileService) -> None:
    use_case = EvaluatePotentialUseCase(_profile_service=profile_service)

    sample = use_case.execute(s=0.0, params=BulkParams(temperature=2.0, kappa=1.0))

    assert sample.f_ms == pytest.approx(-np.log(4.0 * np.pi), abs=1e-12)
    assert sample.psi_b == pytest.approx(-2.0 * np.log(4.0 * np.pi), abs=1e-12)
    assert sample.margin == pytest.approx(1.0 / 3.0, rel=1e-14)


def test_evaluate_potential_rejects_boundary_state(
    profile_service: UniaxialProfileService,
) -> None:
    use_case = EvaluatePotentialUseCase(_profile_service=profile_service)

    with pytest.raises(EvaluatePotentialUseCase.NEAR_BOUNDARY_ERROR):
        use_case.execute(s=1.0, params=BulkParams())
