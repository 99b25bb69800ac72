from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from src.models.scalar import ZERO, Scalar, ScalarLike, as_scalar

AtomLabel = str

FRESH_LABEL_PREFIX = "~fresh"


@dataclass(frozen=True)
class FinSuppVector:
    """Element of c00(Λ): a finitely-supported map from atom labels to rationals.

    Entries are kept sorted by label and never include zeros, so structural
    equality is mathematical equality.
    """

    items: Tuple[Tuple[AtomLabel, Scalar], ...] = ()

    def __post_init__(self):
        labels = [label for label, _ in self.items]
        if labels != sorted(set(labels)) or any(value == ZERO for _, value in self.items):
            raise ValueError("FinSuppVector items must be sorted, unique and nonzero; use from_mapping")

    @classmethod
    def from_mapping(cls, entries: Mapping[AtomLabel, ScalarLike]) -> "FinSuppVector":
        canonical = {}
        for label, value in entries.items():
            if not isinstance(label, str):
                raise TypeError(f"Atom labels must be text, got {type(label).__name__}")
            value = as_scalar(value)
            if value != ZERO:
                canonical[label] = value
        return cls(tuple(sorted(canonical.items())))

    @classmethod
    def zero(cls) -> "FinSuppVector":
        return cls()

    @cached_property
    def entries(self) -> Dict[AtomLabel, Scalar]:
        return dict(self.items)

    @property
    def support(self) -> FrozenSet[AtomLabel]:
        return frozenset(self.entries)

    def coord(self, label: AtomLabel) -> Scalar:
        return self.entries.get(label, ZERO)

    def is_zero(self) -> bool:
        return not self.items

    def __len__(self) -> int:
        return len(self.items)


def fresh_label(existing: Iterable[AtomLabel]) -> AtomLabel:
    """Return a deterministic label that is not in ``existing``."""
    taken = set(existing)
    index = 0
    while f"{FRESH_LABEL_PREFIX}{index}" in taken:
        index += 1
    return f"{FRESH_LABEL_PREFIX}{index}"
