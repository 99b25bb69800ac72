"""Algebra structure of the unital hull R*I + A0."""

from collections import defaultdict
from typing import Dict

from src.models.operator import Index, Operator
from src.models.scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar
from src.models.vector import AtomLabel, FinSuppVector


def matrix_unit(a: AtomLabel, b: AtomLabel) -> Operator:
    """The rank-one operator a (x) phi_b, sending e_b to e_a."""
    return Operator.from_entries({(a, b): ONE})


def identity_op(scalar: ScalarLike = ONE) -> Operator:
    """The scalar operator c*I."""
    return Operator(as_scalar(scalar))


def apply(t: Operator, x: FinSuppVector) -> FinSuppVector:
    """Tx, with (Tx)_a = c*x_a + sum_b M[a, b]*x_b."""
    result: Dict[AtomLabel, Scalar] = defaultdict(lambda: ZERO)
    if t.scalar != ZERO:
        for label, value in x.items:
            result[label] += t.scalar * value
    for (row, col), value in t.items:
        x_col = x.coord(col)
        if x_col != ZERO:
            result[row] += value * x_col
    return FinSuppVector.from_mapping(result)


def add_op(t: Operator, s: Operator) -> Operator:
    entries: Dict[Index, Scalar] = defaultdict(lambda: ZERO)
    for index, value in t.items:
        entries[index] += value
    for index, value in s.items:
        entries[index] += value
    return Operator.from_entries(entries, t.scalar + s.scalar)


def scale_op(factor: ScalarLike, t: Operator) -> Operator:
    factor = as_scalar(factor)
    return Operator.from_entries({index: factor * value for index, value in t.items}, factor * t.scalar)


def neg_op(t: Operator) -> Operator:
    return scale_op(-1, t)


def sub_op(t: Operator, s: Operator) -> Operator:
    return add_op(t, neg_op(s))


def compose(t: Operator, s: Operator) -> Operator:
    """TS = cT*cS*I + (cT*MS + cS*MT + MT*MS)."""
    entries: Dict[Index, Scalar] = defaultdict(lambda: ZERO)
    for index, value in s.items:
        entries[index] += t.scalar * value
    for index, value in t.items:
        entries[index] += s.scalar * value

    s_by_row: Dict[AtomLabel, list] = defaultdict(list)
    for (row, col), value in s.items:
        s_by_row[row].append((col, value))
    for (row, shared), t_value in t.items:
        for col, s_value in s_by_row.get(shared, ()):
            entries[(row, col)] += t_value * s_value

    return Operator.from_entries(entries, t.scalar * s.scalar)


def commutator(t: Operator, s: Operator) -> Operator:
    """TS - ST."""
    return sub_op(compose(t, s), compose(s, t))
