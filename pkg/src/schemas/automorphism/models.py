from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.automorphism import AutomorphismImages, PermDiag
from src.models.scalar import format_scalar
from src.schemas.common import RationalText
from src.schemas.operator.models import OperatorPayload


class PermDiagPayload(BaseModel):
    """Text form of a factored automorphism; unlisted labels are fixed with delta 1."""

    model_config = ConfigDict(extra="forbid")

    pi: Dict[str, str] = Field(default_factory=dict, description="Non-fixed points of the permutation")
    delta: Dict[str, RationalText] = Field(default_factory=dict, description="Positive diagonal coefficients")

    @classmethod
    def from_domain(cls, pd: PermDiag) -> "PermDiagPayload":
        return cls(pi=dict(pd.pi), delta={label: format_scalar(value) for label, value in pd.delta})


class ImageEntryPayload(BaseModel):
    """Image of the matrix unit row (x) phi_col."""

    model_config = ConfigDict(extra="forbid")

    row: str = Field(..., description="Label a of the matrix unit a (x) phi_b")
    col: str = Field(..., description="Label b of the matrix unit a (x) phi_b")
    operator: OperatorPayload = Field(..., description="Image of the matrix unit")


class AutomorphismImagesPayload(BaseModel):
    """Text form of the images F_ab over a finite support."""

    model_config = ConfigDict(extra="forbid")

    support: List[str] = Field(..., description="Finite support set")
    images: List[ImageEntryPayload] = Field(..., description="One image per pair of support labels")

    @model_validator(mode="after")
    def validate_images(self) -> "AutomorphismImagesPayload":
        if len(self.support) != len(set(self.support)):
            raise ValueError("Support labels must be unique")
        indices = [(image.row, image.col) for image in self.images]
        if len(indices) != len(set(indices)):
            raise ValueError("Images must not repeat a (row, col) pair")
        support = set(self.support)
        if any(row not in support or col not in support for row, col in indices):
            raise ValueError("Images must be indexed by support labels")
        return self

    def to_domain(self) -> AutomorphismImages:
        return AutomorphismImages.from_mapping(
            self.support, {(image.row, image.col): image.operator.to_domain() for image in self.images}
        )

    @classmethod
    def from_domain(cls, imgs: AutomorphismImages) -> "AutomorphismImagesPayload":
        return cls(
            support=list(imgs.support),
            images=[
                ImageEntryPayload(row=row, col=col, operator=OperatorPayload.from_domain(operator))
                for (row, col), operator in imgs.images
            ],
        )
