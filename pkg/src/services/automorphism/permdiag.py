"""Operations on factored automorphisms T -> P D T D^-1 P^-1."""

from typing import Dict, Iterable, Tuple

from src.models.automorphism import AutomorphismImages, PermDiag
from src.models.operator import Index, Operator
from src.models.scalar import ONE, Scalar
from src.models.vector import AtomLabel
from src.services.operator.algebra import matrix_unit, scale_op
from src.services.operator.lattice import finite_truncation
from src.services.operator.norm import op_norm
from src.services.operator.structure import invert


def build_images(pd: PermDiag, support: Iterable[AtomLabel]) -> AutomorphismImages:
    """Images Phi(a (x) phi_b) = (delta_a / delta_b) pi(a) (x) phi_pi(b) over ``support``."""
    labels = sorted(set(support))
    images = {
        (a, b): scale_op(pd.coefficient(a) / pd.coefficient(b), matrix_unit(pd.permute(a), pd.permute(b)))
        for a in labels
        for b in labels
    }
    return AutomorphismImages.from_mapping(labels, images)


def apply_permdiag(pd: PermDiag, t: Operator) -> Operator:
    """Phi(T): the scalar part is kept and entry (a, b) moves to (pi(a), pi(b)) scaled by delta_a / delta_b."""
    entries: Dict[Index, Scalar] = {
        (pd.permute(row), pd.permute(col)): pd.coefficient(row) / pd.coefficient(col) * value
        for (row, col), value in t.items
    }
    return Operator.from_entries(entries, t.scalar)


def invert_permdiag(pd: PermDiag) -> PermDiag:
    """PermDiag of Phi^-1: pi' = pi^-1 and delta'_pi(a) = 1 / delta_a.

    The result is not renormalized, so the inverse law holds for operators
    touching labels outside the delta support as well.
    """
    return PermDiag.from_mappings(
        pd.pi_inverse_map,
        {pd.permute(label): 1 / value for label, value in pd.delta},
    )


def normalize_permdiag(pd: PermDiag) -> PermDiag:
    """Scale delta so the canonically smallest label of its support maps to 1."""
    if not pd.delta:
        return pd
    _, pivot = pd.delta[0]
    return PermDiag(pd.pi, tuple((label, value / pivot) for label, value in pd.delta))


def complete_permutation(partial: Dict[AtomLabel, AtomLabel]) -> Dict[AtomLabel, AtomLabel]:
    """Extend an injective map F -> pi(F) to a bijection of F ∪ pi(F).

    Labels of pi(F) \\ F are sent, in canonical order, onto F \\ pi(F).
    """
    domain = set(partial)
    image = set(partial.values())
    completed = dict(partial)
    completed.update(zip(sorted(image - domain), sorted(domain - image)))
    return completed


def restrict_permdiag(pd: PermDiag, support: Iterable[AtomLabel]) -> PermDiag:
    """The normalized PermDiag seen through the matrix units over ``support``."""
    labels = sorted(set(support))
    pi = complete_permutation({label: pd.permute(label) for label in labels})
    return normalize_permdiag(PermDiag.from_mappings(pi, {label: pd.coefficient(label) for label in labels}))


def permutation_operator(pd: PermDiag) -> Operator:
    """P with P e_a = e_pi(a), identity off the support of pi."""
    entries: Dict[Index, Scalar] = {}
    for source, target in pd.pi:
        entries[(target, source)] = ONE
        entries[(source, source)] = entries.get((source, source), 0) - ONE
    return Operator.from_entries(entries, ONE)


def diagonal_operator(pd: PermDiag) -> Operator:
    """D with D e_a = delta_a e_a, identity off the delta support."""
    return Operator.from_entries({(label, label): value - ONE for label, value in pd.delta}, ONE)


def permdiag_operator(pd: PermDiag) -> Operator:
    """PD with PD e_a = delta_a e_pi(a)."""
    entries: Dict[Index, Scalar] = {}
    for label in pd.labels:
        entries[(pd.permute(label), label)] = entries.get((pd.permute(label), label), 0) + pd.coefficient(label)
        entries[(label, label)] = entries.get((label, label), 0) - ONE
    return Operator.from_entries(entries, ONE)


def permdiag_norms(pd: PermDiag) -> Tuple[Scalar, Scalar, Scalar]:
    """Operator norms (||P||, ||D||, ||D^-1||); all finite for finitely-supported delta."""
    d = diagonal_operator(pd)
    return op_norm(permutation_operator(pd)), op_norm(d), op_norm(invert(d))


def truncation_commutes(pd: PermDiag, t: Operator, labels: Iterable[AtomLabel]) -> bool:
    """Check Phi(T_F) = Phi(T)_pi(F)."""
    kept = frozenset(labels)
    left = apply_permdiag(pd, finite_truncation(t, kept))
    right = finite_truncation(apply_permdiag(pd, t), {pd.permute(label) for label in kept})
    return left == right
