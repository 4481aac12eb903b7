import pytest
from pydantic import ValidationError

from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants


def test_elastic_constants_accept_json_aliases() -> None:
    constants = ElasticConstants.model_validate({"L1": 2.0, "L4": 0.3, "L5": -0.1})

    assert constants.weights == (2.0, 0.0, 0.0, 0.3, -0.1)


@pytest.mark.parametrize(
    ("l4", "expected"),
    [
        (0.0, 1.0),
        (0.3, 0.9),
        (-0.3, 0.8),
    ],
)
def test_elastic_constants_lprime1_branches(l4: float, expected: float) -> None:
    assert ElasticConstants(l1=1.0, l4=l4).lprime1 == pytest.approx(expected, rel=1e-15)


def test_elastic_constants_reject_unknown_and_non_finite_values() -> None:
    with pytest.raises(ValidationError):
        ElasticConstants.model_validate({"L6": 1.0})

    with pytest.raises(ValidationError):
        ElasticConstants.model_validate({"L1": float("nan")})
