from pydantic import BaseModel, ConfigDict


class BaseDTO(BaseModel):
    """Immutable, strictly keyed Pydantic model for parameters crossing layer boundaries."""

    model_config = ConfigDict(extra="forbid", from_attributes=True, frozen=True)
