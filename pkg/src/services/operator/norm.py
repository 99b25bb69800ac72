import itertools
from collections import defaultdict
from typing import Dict

from src.models.operator import Operator
from src.models.scalar import ZERO, Scalar
from src.models.vector import AtomLabel, FinSuppVector, fresh_label
from src.services.operator.algebra import apply


def op_norm(t: Operator) -> Scalar:
    """Operator norm on (c00(Λ), sup-norm): the supremum of absolute row sums.

    Rows without stored entries contribute |c|, since Λ is taken to be
    larger than any stored support.
    """
    row_sums: Dict[AtomLabel, Scalar] = defaultdict(lambda: ZERO)
    for row in t.rows:
        row_sums[row] += abs(t.scalar)
    for (row, col), value in t.items:
        if row == col:
            row_sums[row] += abs(value + t.scalar) - abs(t.scalar)
        else:
            row_sums[row] += abs(value)
    return max([abs(t.scalar), *row_sums.values()])


def norm_by_sign_vectors(t: Operator) -> Scalar:
    """Brute-force max of ||Tx||_inf over x in {-1, 0, 1}^(labels of T + one fresh label)."""
    labels = sorted(t.support_labels) + [fresh_label(t.support_labels)]
    best = ZERO
    for signs in itertools.product((-1, 0, 1), repeat=len(labels)):
        image = apply(t, FinSuppVector.from_mapping(dict(zip(labels, signs))))
        best = max([best, *(abs(value) for _, value in image.items)])
    return best
