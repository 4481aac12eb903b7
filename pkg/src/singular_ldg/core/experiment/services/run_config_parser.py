import difflib
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, ValidationError
from pydantic_core import ErrorDetails

from singular_ldg.core.experiment.dtos.run_config import RunConfig
from singular_ldg.core.experiment.exceptions.configuration import ConfigurationError
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)

_DOCUMENT = "<document>"


@dataclass(kw_only=True)
class RunConfigParserService(BaseService):
    """Parse JSON run configurations into validated :class:`RunConfig` objects.

    Every validation failure is reported as a :class:`ConfigurationError` naming the
    dotted key path of the first offending entry. Unknown keys carry the closest
    allowed key as a hint.
    """

    CONFIGURATION_ERROR: ClassVar = ConfigurationError  # noqa: WPS115
    READ_ERROR: ClassVar = OSError  # noqa: WPS115
    VALIDATION_ERROR: ClassVar = ValidationError  # noqa: WPS115

    def parse_config(self, *, path: Path) -> RunConfig:
        """Read and validate the configuration at ``path``.

        Returns:
            The validated configuration with defaults filled in.
        """
        try:
            document = path.read_text(encoding="utf-8")
        except self.READ_ERROR as error:
            raise self.CONFIGURATION_ERROR(
                key_path=str(path),
                reason=error.strerror or "cannot be read",
            ) from error

        config = self.parse_document(document=document)
        logger.debug("Loaded run configuration from %s", path)
        return config

    def parse_document(self, *, document: str) -> RunConfig:
        """Validate a run-configuration JSON document against ``RunConfig``.

        Returns:
            The validated configuration with defaults filled in.
        """
        try:
            return RunConfig.model_validate_json(document)
        except self.VALIDATION_ERROR as error:
            raise self._configuration_error(details=error.errors()[0]) from error

    def _configuration_error(self, *, details: ErrorDetails) -> ConfigurationError:
        location = tuple(str(part) for part in details["loc"])
        key_path = ".".join(location) or _DOCUMENT
        match details["type"]:
            case "extra_forbidden":
                candidates = _allowed_keys(RunConfig, location[:-1])
                matches = difflib.get_close_matches(location[-1], candidates, n=1)
                return self.CONFIGURATION_ERROR(
                    key_path=key_path,
                    reason="unknown key",
                    hint=matches[0] if matches else None,
                )
            case "missing":
                return self.CONFIGURATION_ERROR(key_path=key_path, reason="required key is missing")
            case _:
                return self.CONFIGURATION_ERROR(key_path=key_path, reason=details["msg"])


def _allowed_keys(model: type[BaseModel], parents: tuple[str, ...]) -> list[str]:
    for part in parents:
        nested = next(
            (
                field.annotation
                for name, field in model.model_fields.items()
                if part in {name, field.alias}
            ),
            None,
        )
        if not (isinstance(nested, type) and issubclass(nested, BaseModel)):
            return []

        model = nested

    return [field.alias or name for name, field in model.model_fields.items()]
