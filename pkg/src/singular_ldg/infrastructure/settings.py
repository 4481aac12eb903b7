from pydantic_settings import BaseSettings, SettingsConfigDict


class ApplicationSettings(BaseSettings):
    """Application-wide runtime settings shared by entrypoints."""

    model_config = SettingsConfigDict(env_prefix="SINGULAR_LDG_")

    version: str = "0.1.0"
