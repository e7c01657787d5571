from __future__ import annotations

from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel


class Schema(BaseModel):
    """Base class for JSON documents and configuration models."""

    model_config = ConfigDict(populate_by_name=True, alias_generator=to_camel)
