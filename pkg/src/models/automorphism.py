from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from src.exceptions import IncompleteImages
from src.models.operator import Index, Operator
from src.models.scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar
from src.models.vector import AtomLabel, FinSuppVector


@dataclass(frozen=True)
class PermDiag:
    """Factored automorphism T -> P D T D^-1 P^-1.

    ``pi`` lists the non-fixed points of a finitely-supported bijection (its
    key set is closed under pi), ``delta`` the positive diagonal coefficients
    on an explicit finite support; off that support delta is 1.
    """

    pi: Tuple[Tuple[AtomLabel, AtomLabel], ...] = ()
    delta: Tuple[Tuple[AtomLabel, Scalar], ...] = ()

    def __post_init__(self):
        sources = [source for source, _ in self.pi]
        if sources != sorted(set(sources)):
            raise ValueError("PermDiag pi must be sorted and unique; use from_mappings")
        if any(source == target for source, target in self.pi):
            raise ValueError("PermDiag pi must not list fixed points")
        if {target for _, target in self.pi} != set(sources):
            raise ValueError("PermDiag pi must be a bijection of its support")
        labels = [label for label, _ in self.delta]
        if labels != sorted(set(labels)):
            raise ValueError("PermDiag delta must be sorted and unique; use from_mappings")
        if any(value <= ZERO for _, value in self.delta):
            raise ValueError("PermDiag delta values must be strictly positive")

    @classmethod
    def from_mappings(
        cls, pi: Mapping[AtomLabel, AtomLabel], delta: Mapping[AtomLabel, ScalarLike]
    ) -> "PermDiag":
        moved = {source: target for source, target in pi.items() if source != target}
        return cls(
            tuple(sorted(moved.items())),
            tuple(sorted((label, as_scalar(value)) for label, value in delta.items())),
        )

    @classmethod
    def identity(cls) -> "PermDiag":
        return cls()

    @cached_property
    def pi_map(self) -> Dict[AtomLabel, AtomLabel]:
        return dict(self.pi)

    @cached_property
    def pi_inverse_map(self) -> Dict[AtomLabel, AtomLabel]:
        return {target: source for source, target in self.pi}

    @cached_property
    def delta_map(self) -> Dict[AtomLabel, Scalar]:
        return dict(self.delta)

    @property
    def labels(self) -> FrozenSet[AtomLabel]:
        """Labels where pi moves something or delta is stored."""
        return frozenset(self.pi_map) | frozenset(self.delta_map)

    def permute(self, label: AtomLabel) -> AtomLabel:
        return self.pi_map.get(label, label)

    def unpermute(self, label: AtomLabel) -> AtomLabel:
        return self.pi_inverse_map.get(label, label)

    def coefficient(self, label: AtomLabel) -> Scalar:
        return self.delta_map.get(label, ONE)


@dataclass(frozen=True)
class AutomorphismImages:
    """The images F_ab of the matrix units a (x) phi_b over a finite support."""

    support: Tuple[AtomLabel, ...]
    images: Tuple[Tuple[Index, Operator], ...]

    def __post_init__(self):
        if list(self.support) != sorted(set(self.support)):
            raise ValueError("AutomorphismImages support must be sorted and unique; use from_mapping")
        given = {index for index, _ in self.images}
        for a in self.support:
            for b in self.support:
                if (a, b) not in given:
                    raise IncompleteImages(a, b, message=f"No image given for the matrix unit ({a}, {b})")
        if len(given) != len(self.images) or any(
            a not in self.support or b not in self.support for a, b in given
        ):
            raise ValueError("AutomorphismImages must hold exactly one image per pair of support labels")

    @classmethod
    def from_mapping(cls, support: Iterable[AtomLabel], images: Mapping[Index, Operator]) -> "AutomorphismImages":
        return cls(tuple(sorted(set(support))), tuple(sorted(images.items(), key=lambda item: item[0])))

    @cached_property
    def image_map(self) -> Dict[Index, Operator]:
        return dict(self.images)

    def image(self, a: AtomLabel, b: AtomLabel) -> Operator:
        return self.image_map[(a, b)]


@dataclass(frozen=True)
class RankOneFactors:
    """Positive factors of a rank-one operator F = gamma_ratio * (u (x) psi).

    Both ``u`` and ``psi`` are normalized so that their canonically first
    nonzero entry is 1.
    """

    u: FinSuppVector
    psi: FinSuppVector
    gamma_ratio: Scalar

    def outer(self) -> Operator:
        return Operator.from_entries(
            {
                (row, col): self.gamma_ratio * u_value * psi_value
                for row, u_value in self.u.items
                for col, psi_value in self.psi.items
            }
        )
