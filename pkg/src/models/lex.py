from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

from src.models.scalar import ZERO, Scalar, ScalarLike, as_scalar
from src.models.vector import FinSuppVector


class Ordering(str, Enum):
    """Outcome of a comparison in a totally ordered space."""

    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class HeadOrder(str, Enum):
    """Order carried by the head X of a lexicographic product X∘Y."""

    LEX = "lex"
    COORDINATEWISE = "coordinatewise"


@dataclass(frozen=True)
class LexVector:
    """Element of R^n ordered lexicographically (n >= 1)."""

    coords: Tuple[Scalar, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("LexVector needs at least one coordinate")

    @classmethod
    def of(cls, values: Iterable[ScalarLike]) -> "LexVector":
        return cls(tuple(as_scalar(value) for value in values))

    @classmethod
    def zero(cls, dimension: int) -> "LexVector":
        return cls((ZERO,) * dimension)

    @classmethod
    def unit(cls, dimension: int, index: int) -> "LexVector":
        """Basis vector e_index, with 1-based ``index``."""
        return cls(tuple(Scalar(1) if i == index - 1 else ZERO for i in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def leading_index(self) -> int:
        """1-based index of the first nonzero coordinate, 0 for the zero vector."""
        for i, value in enumerate(self.coords, start=1):
            if value != ZERO:
                return i
        return 0


@dataclass(frozen=True)
class LexFunctional:
    """Linear functional phi(x) = sum c_i x_i on R^n."""

    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("LexFunctional needs at least one coefficient")

    @classmethod
    def of(cls, values: Iterable[ScalarLike]) -> "LexFunctional":
        return cls(tuple(as_scalar(value) for value in values))

    @property
    def dimension(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class LexProductElement:
    """Element (x, y) of the lexicographic product X∘Y with tail Y = c00(Λ)."""

    head: LexVector
    tail: FinSuppVector = FinSuppVector()
    head_order: HeadOrder = HeadOrder.LEX
