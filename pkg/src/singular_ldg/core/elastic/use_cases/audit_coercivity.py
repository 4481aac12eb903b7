import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.entities.coercivity_report import CoercivityReport
from singular_ldg.core.elastic.exceptions.invalid_sample_count import InvalidSampleCountError
from singular_ldg.core.elastic.services.coercivity_audit import CoercivityAuditService
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class AuditCoercivityUseCase(BaseUseCase):
    """Audit a set of elastic constants for coercivity of the quadratic energy."""

    INVALID_SAMPLE_COUNT_ERROR: ClassVar = InvalidSampleCountError  # noqa: WPS115

    _coercivity_audit_service: Injected[CoercivityAuditService]

    def execute(self, *, constants: ElasticConstants, samples: int, seed: int) -> CoercivityReport:
        """Check the coercivity inequalities and, for ``samples > 0``, sampled lower bounds.

        Returns:
            The coercivity report.
        """
        report = self._coercivity_audit_service.audit(
            constants=constants,
            samples=samples,
            seed=seed,
        )
        if not report.satisfied:
            logger.warning(
                "Elastic constants violate the coercivity conditions: %s",
                ", ".join(f"{value:.6g}" for value in report.inequality_values),
            )
        return report
