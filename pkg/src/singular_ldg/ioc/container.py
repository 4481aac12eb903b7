from collections.abc import Iterable

from diwire import Container, DependencyRegistrationPolicy, MissingPolicy
from pydantic_settings import BaseSettings

from singular_ldg.infrastructure.logfire.configurator import LogfireConfigurator
from singular_ldg.infrastructure.logging.configurator import LoggingConfigurator
from singular_ldg.ioc.registry import register_dependencies


def get_container(
    *,
    configure_logging: bool = True,
    configure_logfire: bool = True,
    settings_overrides: Iterable[BaseSettings] = (),
) -> Container:
    """Build the dependency injection container and bootstrap integrations.

    Settings objects in ``settings_overrides`` replace the environment-loaded
    instance of their class before any integration is configured.

    Returns:
        Configured ``diwire`` container for the application.
    """
    container = Container(
        missing_policy=MissingPolicy.REGISTER_RECURSIVE,
        dependency_registration_policy=DependencyRegistrationPolicy.REGISTER_RECURSIVE,
    )

    register_dependencies(container)
    for settings in settings_overrides:
        container.add_instance(settings, provides=type(settings))

    if configure_logging:
        _configure_logging(container)

    if configure_logfire:
        _configure_logfire(container)

    return container


def _configure_logging(container: Container) -> None:
    configurator = container.resolve(LoggingConfigurator)
    configurator.configure()


def _configure_logfire(container: Container) -> None:
    configurator = container.resolve(LogfireConfigurator)
    configurator.configure()
