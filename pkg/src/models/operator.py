from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Mapping, Tuple

from src.models.scalar import ZERO, Scalar, ScalarLike, as_scalar
from src.models.vector import AtomLabel

Index = Tuple[AtomLabel, AtomLabel]


@dataclass(frozen=True)
class Operator:
    """Element of the unital hull R*I + A0.

    ``scalar`` is the coefficient c of the identity and ``items`` the sorted,
    zero-free entries of the finitely-supported matrix part M, so that
    phi_a(T b) = c*[a == b] + M[a, b].
    """

    scalar: Scalar = ZERO
    items: Tuple[Tuple[Index, Scalar], ...] = ()

    def __post_init__(self):
        indices = [index for index, _ in self.items]
        if indices != sorted(set(indices)) or any(value == ZERO for _, value in self.items):
            raise ValueError("Operator items must be sorted, unique and nonzero; use from_entries")

    @classmethod
    def from_entries(cls, entries: Mapping[Index, ScalarLike], scalar: ScalarLike = ZERO) -> "Operator":
        canonical = {}
        for (row, col), value in entries.items():
            value = as_scalar(value)
            if value != ZERO:
                canonical[(row, col)] = value
        return cls(as_scalar(scalar), tuple(sorted(canonical.items())))

    @cached_property
    def entries(self) -> Dict[Index, Scalar]:
        return dict(self.items)

    @cached_property
    def rows(self) -> FrozenSet[AtomLabel]:
        return frozenset(row for (row, _), _ in self.items)

    @cached_property
    def cols(self) -> FrozenSet[AtomLabel]:
        return frozenset(col for (_, col), _ in self.items)

    @property
    def support_labels(self) -> FrozenSet[AtomLabel]:
        return self.rows | self.cols

    def matrix_entry(self, row: AtomLabel, col: AtomLabel) -> Scalar:
        """Stored entry of the matrix part (without the scalar part)."""
        return self.entries.get((row, col), ZERO)

    def entry(self, row: AtomLabel, col: AtomLabel) -> Scalar:
        """Entry phi_row(T col) of the full matrix, scalar part included."""
        value = self.matrix_entry(row, col)
        return value + self.scalar if row == col else value

    def is_in_a0(self) -> bool:
        return self.scalar == ZERO

    def is_zero(self) -> bool:
        return self.scalar == ZERO and not self.items
