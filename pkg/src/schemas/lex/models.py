from typing import List

from pydantic import RootModel, field_validator

from src.models.lex import LexVector
from src.models.scalar import format_scalar
from src.schemas.common import RationalText


class LexPayload(RootModel[List[RationalText]]):
    """Ordered rational list, the text form of a LexVector."""

    @field_validator("root")
    @classmethod
    def validate_nonempty(cls, v: List[str]) -> List[str]:
        if not v:
            raise ValueError("At least one coordinate is required")
        return v

    @classmethod
    def from_vector(cls, x: LexVector) -> "LexPayload":
        return cls([format_scalar(value) for value in x.coords])
