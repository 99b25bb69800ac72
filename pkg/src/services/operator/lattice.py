"""Order structure of the unital hull: positivity, modulus, lattice operations, truncations.

Every operator is read through its virtual full matrix, whose diagonal
carries the scalar part, so lattice operations are entrywise.
"""

from typing import Dict, Iterable

from src.models.operator import Index, Operator
from src.models.scalar import ZERO, Scalar
from src.models.vector import AtomLabel
from src.services.operator.algebra import add_op, neg_op, scale_op, sub_op


def is_positive_op(t: Operator) -> bool:
    """T >= 0 iff phi_b(T a) >= 0 for all atoms a, b."""
    if t.scalar < ZERO:
        return False
    for (row, col), value in t.items:
        total = value + t.scalar if row == col else value
        if total < ZERO:
            return False
    return True


def op_leq(t: Operator, s: Operator) -> bool:
    """T <= S in the operator order."""
    return is_positive_op(sub_op(s, t))


def modulus_op(t: Operator) -> Operator:
    """|T|: entrywise absolute value of the full matrix, scalar part included."""
    scalar = abs(t.scalar)
    entries: Dict[Index, Scalar] = {}
    for (row, col), value in t.items:
        if row == col:
            entries[(row, col)] = abs(value + t.scalar) - scalar
        else:
            entries[(row, col)] = abs(value)
    return Operator.from_entries(entries, scalar)


def lattice_sup_op(t: Operator, s: Operator) -> Operator:
    """T ∨ S = ((T + S) + |T - S|) / 2."""
    return scale_op(Scalar(1, 2), add_op(add_op(t, s), modulus_op(sub_op(t, s))))


def lattice_inf_op(t: Operator, s: Operator) -> Operator:
    """T ∧ S = ((T + S) - |T - S|) / 2."""
    return scale_op(Scalar(1, 2), sub_op(add_op(t, s), modulus_op(sub_op(t, s))))


def positive_part_op(t: Operator) -> Operator:
    return lattice_sup_op(t, Operator())


def negative_part_op(t: Operator) -> Operator:
    return lattice_sup_op(neg_op(t), Operator())


def finite_truncation(t: Operator, labels: Iterable[AtomLabel]) -> Operator:
    """T_F = sum over a, b in F of (a (x) phi_a) T (b (x) phi_b).

    The result always lies in A0: the scalar part turns into diagonal
    entries on F.
    """
    kept = frozenset(labels)
    entries: Dict[Index, Scalar] = {(label, label): t.scalar for label in kept}
    for (row, col), value in t.items:
        if row in kept and col in kept:
            entries[(row, col)] = entries.get((row, col), ZERO) + value
    return Operator.from_entries(entries)
