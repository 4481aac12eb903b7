import logging
import sys
from dataclasses import dataclass

import colorlog
import logfire
from diwire import Injected
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from singular_ldg.foundation.configurator import BaseConfigurator
from singular_ldg.infrastructure.logfire.configurator import LogfireSettings

_LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "bold_red",
}


class LoggingSettings(BaseSettings):
    """Logging settings loaded from the runtime environment."""

    model_config = SettingsConfigDict(env_prefix="LOGGING_")

    level: str = "INFO"
    logfire_settings: LogfireSettings = Field(default_factory=LogfireSettings)


@dataclass(kw_only=True)
class LoggingConfigurator(BaseConfigurator):
    """Send process logs to stderr so stdout stays reserved for tables and summaries."""

    _settings: Injected[LoggingSettings]

    def configure(self) -> None:
        """Apply standard logging configuration for the process."""
        logging.basicConfig(
            level=self._settings.level.upper(),
            format="%(asctime)s %(levelname)s %(name)s %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
            handlers=self._handlers,
            force=True,
        )

        logging.getLogger("diwire._internal").setLevel(logging.WARNING)

    @property
    def _handlers(self) -> list[logging.Handler]:
        stream_handler = logging.StreamHandler(stream=sys.stderr)
        stream_handler.setFormatter(
            colorlog.ColoredFormatter(
                "%(log_color)s%(asctime)s %(levelname)s%(reset)s %(name)s %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
                log_colors=_LOG_COLORS,
                stream=sys.stderr,
            ),
        )
        handlers: list[logging.Handler] = [stream_handler]

        if self._settings.logfire_settings.is_enabled:
            handlers.append(logfire.LogfireLoggingHandler())

        return handlers
