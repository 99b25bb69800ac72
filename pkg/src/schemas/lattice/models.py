from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, RootModel

from src.models.scalar import format_scalar, parse_scalar
from src.models.vector import FinSuppVector
from src.schemas.common import RationalText


class VectorPayload(BaseModel):
    """Text form of a finitely-supported vector; omitted labels are zero."""

    model_config = ConfigDict(extra="forbid")

    entries: Dict[str, RationalText] = Field(default_factory=dict, description="Label -> reduced rational")

    def to_domain(self) -> FinSuppVector:
        return FinSuppVector.from_mapping({label: parse_scalar(value) for label, value in self.entries.items()})

    @classmethod
    def from_domain(cls, vector: FinSuppVector) -> "VectorPayload":
        return cls(entries={label: format_scalar(value) for label, value in vector.items})


class FunctionFamilyPayload(RootModel[List[VectorPayload]]):
    """List-wrapped vectors, used for function families and delta bases."""

    def to_domain(self) -> List[FinSuppVector]:
        return [vector.to_domain() for vector in self.root]

    @classmethod
    def from_domain(cls, vectors: List[FinSuppVector]) -> "FunctionFamilyPayload":
        return cls([VectorPayload.from_domain(vector) for vector in vectors])
