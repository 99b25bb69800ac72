"""Exact dense linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``; the elimination itself runs on
sympy's ``DomainMatrix`` over ``QQ``. Inputs are never mutated.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

Matrix = List[List[Fraction]]


def to_domain_matrix(matrix: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    rows = [[QQ(value.numerator, value.denominator) for value in map(Fraction, row)] for row in matrix]
    return DomainMatrix(rows, (len(rows), len(rows[0]) if rows else 0), QQ)


def from_domain_matrix(dm: DomainMatrix) -> Matrix:
    return [[Fraction(int(value.numerator), int(value.denominator)) for value in row] for row in dm.to_list()]


def _is_empty(matrix: Sequence[Sequence[Fraction]]) -> bool:
    return not matrix or not matrix[0]


def row_echelon(matrix: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduce to reduced row echelon form.

    :param matrix: Rectangular rational matrix
    :returns: Tuple of (reduced matrix, pivot column of each nonzero row)
    """
    if _is_empty(matrix):
        return [[Fraction(value) for value in row] for row in matrix], []
    reduced, pivots = to_domain_matrix(matrix).rref()
    return from_domain_matrix(reduced), list(pivots)


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q."""
    if _is_empty(matrix):
        return 0
    return to_domain_matrix(matrix).rank()


def inverse(matrix: Sequence[Sequence[Fraction]]) -> Optional[Matrix]:
    """Exact inverse of a square matrix, or None when it is singular."""
    if not matrix:
        return []
    try:
        return from_domain_matrix(to_domain_matrix(matrix).inv())
    except DMNonInvertibleMatrixError:
        return None


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One exact solution x of ``matrix @ x = rhs`` (free variables set to 0), or None."""
    n_cols = len(matrix[0]) if matrix else 0
    augmented = [[Fraction(value) for value in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    reduced, pivots = row_echelon(augmented)
    if n_cols in pivots:
        return None
    solution = [Fraction(0)] * n_cols
    for row, piv_c in zip(reduced, pivots):
        solution[piv_c] = row[n_cols]
    return solution
