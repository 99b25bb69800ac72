"""Rank, the dim(T A T) oracle and inversion in the unital hull."""

import logging
from typing import Iterable, List, Sequence

from src.exceptions import NotInvertible, ScalarPartNonzero
from src.models.operator import Operator
from src.models.scalar import ZERO, Scalar
from src.models.vector import AtomLabel
from src.services.operator import linalg

logger = logging.getLogger(__name__)


def to_dense(t: Operator, rows: Sequence[AtomLabel], cols: Sequence[AtomLabel]) -> List[List[Scalar]]:
    """Block of the full matrix (scalar part included) over ``rows`` x ``cols``."""
    return [[t.entry(row, col) for col in cols] for row in rows]


def _require_a0(t: Operator, operation: str) -> None:
    if t.scalar != ZERO:
        raise ScalarPartNonzero(f"{operation} needs an operator in A0, got scalar part {t.scalar}")


def matrix_rank(t: Operator) -> int:
    """Rank of the matrix part of an operator in A0."""
    _require_a0(t, "matrix_rank")
    return linalg.rank(to_dense(t, sorted(t.rows), sorted(t.cols)))


def is_rank_one(t: Operator) -> bool:
    return matrix_rank(t) == 1


def dim_span_tat(t: Operator, probe: Iterable[AtomLabel]) -> int:
    """Dimension of span{T (a (x) phi_b) T : a, b in probe}.

    T (a (x) phi_b) T = (T a) (x) (phi_b o T), so every product is the outer
    product of column a with row b. The probe set is widened to cover the
    support of T.
    """
    _require_a0(t, "dim_span_tat")
    labels = sorted(set(probe) | t.support_labels)
    if not labels:
        return 0
    columns = {a: [t.matrix_entry(row, a) for row in labels] for a in labels}
    rows = {b: [t.matrix_entry(b, col) for col in labels] for b in labels}
    products = []
    for a in labels:
        if not any(columns[a]):
            continue
        for b in labels:
            if not any(rows[b]):
                continue
            products.append([u * v for u in columns[a] for v in rows[b]])
    return linalg.rank(products)


def is_invertible(t: Operator) -> bool:
    """Whether T = c*I + M has an inverse in the unital hull."""
    if t.scalar == ZERO:
        return False
    labels = sorted(t.support_labels)
    return linalg.rank(to_dense(t, labels, labels)) == len(labels)


def invert(t: Operator) -> Operator:
    """Inverse of T = c*I + M in the unital hull.

    Off F = rows(T) ∪ cols(T) the operator acts as c*I, so T^-1 is 1/c
    there and the exact inverse B of the block c*I_F + M_F on F.
    """
    if t.scalar == ZERO:
        raise NotInvertible("Operator has zero scalar part and is not invertible in the unital hull")
    labels = sorted(t.support_labels)
    block_inverse = linalg.inverse(to_dense(t, labels, labels))
    if block_inverse is None:
        logger.warning(f"Singular finite block over {len(labels)} labels")
        raise NotInvertible(f"Finite block over {labels} is singular")
    scalar = 1 / t.scalar
    entries = {}
    for i, row in enumerate(labels):
        for j, col in enumerate(labels):
            value = block_inverse[i][j]
            entries[(row, col)] = value - scalar if i == j else value
    return Operator.from_entries(entries, scalar)
