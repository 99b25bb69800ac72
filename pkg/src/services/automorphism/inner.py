"""Inner automorphisms X -> T X T^-1 and the centralizer criterion."""

from typing import Iterable

from src.exceptions import NotInvertible
from src.models.operator import Operator
from src.models.scalar import ZERO
from src.models.vector import AtomLabel, fresh_label
from src.services.operator.algebra import compose, matrix_unit
from src.services.operator.structure import invert, is_invertible


def conjugate(t: Operator, x: Operator) -> Operator:
    """T X T^-1."""
    return compose(compose(t, x), invert(t))


def same_inner(t1: Operator, t2: Operator, probe: Iterable[AtomLabel] = ()) -> bool:
    """Whether T1 and T2 induce the same inner automorphism.

    This holds iff T2^-1 T1 lies in the centralizer, i.e. is a nonzero
    multiple of the identity. The probe set is accepted for symmetry with
    the brute-force check and does not change the answer.

    :raises NotInvertible: If T1 or T2 has no inverse in the unital hull
    """
    if not is_invertible(t1):
        raise NotInvertible("T1 has no inverse in the unital hull")
    quotient = compose(invert(t2), t1)
    return not quotient.items and quotient.scalar != ZERO


def same_inner_by_conjugation(t1: Operator, t2: Operator, probe: Iterable[AtomLabel] = ()) -> bool:
    """Brute-force check: T1 E T1^-1 == T2 E T2^-1 for every matrix unit E.

    Matrix units range over the probe set, both supports and one fresh
    label, which stands for every atom outside them.
    """
    labels = set(probe) | t1.support_labels | t2.support_labels
    labels.add(fresh_label(labels))
    inverse_1, inverse_2 = invert(t1), invert(t2)
    for a in sorted(labels):
        for b in sorted(labels):
            unit = matrix_unit(a, b)
            if compose(compose(t1, unit), inverse_1) != compose(compose(t2, unit), inverse_2):
                return False
    return True
