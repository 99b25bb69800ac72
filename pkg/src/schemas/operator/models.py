from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.operator import Operator
from src.models.scalar import format_scalar, parse_scalar
from src.schemas.common import RationalText


class OperatorEntryPayload(BaseModel):
    """Single stored entry of the matrix part."""

    model_config = ConfigDict(extra="forbid")

    row: str = Field(..., description="Row atom label")
    col: str = Field(..., description="Column atom label")
    value: RationalText = Field(..., description="Entry as a reduced rational")


class OperatorPayload(BaseModel):
    """Text form of an operator c*I + M."""

    model_config = ConfigDict(extra="forbid")

    scalar: RationalText = Field("0/1", description="Coefficient of the identity")
    entries: List[OperatorEntryPayload] = Field(default_factory=list, description="Entries sorted by (row, col)")

    @model_validator(mode="after")
    def validate_unique_entries(self) -> "OperatorPayload":
        indices = [(entry.row, entry.col) for entry in self.entries]
        if len(indices) != len(set(indices)):
            raise ValueError("Operator entries must not repeat a (row, col) pair")
        return self

    def to_domain(self) -> Operator:
        return Operator.from_entries(
            {(entry.row, entry.col): parse_scalar(entry.value) for entry in self.entries},
            parse_scalar(self.scalar),
        )

    @classmethod
    def from_domain(cls, operator: Operator) -> "OperatorPayload":
        return cls(
            scalar=format_scalar(operator.scalar),
            entries=[
                OperatorEntryPayload(row=row, col=col, value=format_scalar(value))
                for (row, col), value in operator.items
            ],
        )
