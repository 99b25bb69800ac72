"""Vector lattice operations on c00(Λ).

c00(Λ) is atomic and Dedekind complete, so every lattice operation is
computed entrywise over the union of the supports.
"""

from typing import Callable, List, Tuple

from src.models.scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar
from src.models.vector import AtomLabel, FinSuppVector


def _combine(x: FinSuppVector, y: FinSuppVector, op: Callable[[Scalar, Scalar], Scalar]) -> FinSuppVector:
    labels = x.support | y.support
    return FinSuppVector.from_mapping({label: op(x.coord(label), y.coord(label)) for label in labels})


def basis_vector(label: AtomLabel, value: ScalarLike = ONE) -> FinSuppVector:
    """Return ``value * e_label``."""
    return FinSuppVector.from_mapping({label: value})


def coord(x: FinSuppVector, label: AtomLabel) -> Scalar:
    """Coordinate functional phi_a(x)."""
    return x.coord(label)


def is_positive_vec(x: FinSuppVector) -> bool:
    return all(value > ZERO for _, value in x.items)


def add_vec(x: FinSuppVector, y: FinSuppVector) -> FinSuppVector:
    return _combine(x, y, lambda s, t: s + t)


def sub_vec(x: FinSuppVector, y: FinSuppVector) -> FinSuppVector:
    return _combine(x, y, lambda s, t: s - t)


def scale_vec(factor: ScalarLike, x: FinSuppVector) -> FinSuppVector:
    factor = as_scalar(factor)
    return FinSuppVector.from_mapping({label: factor * value for label, value in x.items})


def neg_vec(x: FinSuppVector) -> FinSuppVector:
    return scale_vec(-1, x)


def lattice_sup_vec(x: FinSuppVector, y: FinSuppVector) -> FinSuppVector:
    return _combine(x, y, max)


def lattice_inf_vec(x: FinSuppVector, y: FinSuppVector) -> FinSuppVector:
    return _combine(x, y, min)


def abs_vec(x: FinSuppVector) -> FinSuppVector:
    return FinSuppVector.from_mapping({label: abs(value) for label, value in x.items})


def positive_part(x: FinSuppVector) -> FinSuppVector:
    return lattice_sup_vec(x, FinSuppVector.zero())


def negative_part(x: FinSuppVector) -> FinSuppVector:
    return lattice_sup_vec(neg_vec(x), FinSuppVector.zero())


def vec_leq(x: FinSuppVector, y: FinSuppVector) -> bool:
    """Pointwise order x <= y."""
    return is_positive_vec(sub_vec(y, x))


def are_disjoint(x: FinSuppVector, y: FinSuppVector) -> bool:
    """|x| ∧ |y| = 0, i.e. the supports do not meet."""
    return lattice_inf_vec(abs_vec(x), abs_vec(y)).is_zero()


def is_atom(x: FinSuppVector) -> bool:
    """Atoms of c00(Λ) are the positive multiples of basis vectors."""
    return len(x) == 1 and is_positive_vec(x)


def atomic_expansion(x: FinSuppVector) -> List[Tuple[AtomLabel, Scalar]]:
    """Pairs (a, phi_a(x)) with x = sum phi_a(x) a, in canonical label order."""
    return list(x.items)
