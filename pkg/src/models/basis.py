from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from src.models.vector import AtomLabel, FinSuppVector


@dataclass(frozen=True)
class FunctionFamily:
    """Ordered, nonempty list of finitely-supported functions on a point set."""

    functions: Tuple[FinSuppVector, ...]

    def __post_init__(self):
        if not self.functions:
            raise ValueError("FunctionFamily needs at least one function")

    @classmethod
    def of(cls, functions: Iterable[FinSuppVector]) -> "FunctionFamily":
        return cls(tuple(functions))

    @property
    def points(self) -> FrozenSet[AtomLabel]:
        """Union of the supports."""
        return frozenset().union(*(function.support for function in self.functions))


@dataclass(frozen=True)
class DeltaBasis:
    """Basis f_1..f_n and points a_1..a_n with f_i(a_j) = [i == j]."""

    basis: Tuple[FinSuppVector, ...]
    points: Tuple[AtomLabel, ...]
