import logging
from typing import List, Optional, Sequence, Tuple

from src.exceptions import LinearlyDependent
from src.models.basis import DeltaBasis, FunctionFamily
from src.models.scalar import Scalar
from src.models.vector import AtomLabel, FinSuppVector
from src.services.lattice.vectors import add_vec, scale_vec, sub_vec
from src.services.operator import linalg

logger = logging.getLogger(__name__)


class DeltaBasisBuilder:
    """Builds a biorthogonal basis-and-points system for a span of functions.

    Follows the induction on the number of functions: pick a point a_1 where
    h_1 does not vanish, clear h_1(a_1) from the other functions, recurse on
    them, then back-substitute g_1 = h_1 - sum h_1(a_i) f_i and normalize.
    Pivot points are the canonically smallest admissible labels.
    """

    def build(self, family: FunctionFamily) -> DeltaBasis:
        """Return f_1..f_n and a_1..a_n with f_i(a_j) = [i == j].

        :param family: Functions to span
        :returns: DeltaBasis with the same span as ``family``
        :raises LinearlyDependent: If the functions are linearly dependent
        """
        basis, points = self._build(list(family.functions))
        logger.info(f"Built delta basis of dimension {len(basis)} on points {points}")
        return DeltaBasis(tuple(basis), tuple(points))

    def _build(self, functions: List[FinSuppVector]) -> Tuple[List[FinSuppVector], List[AtomLabel]]:
        head, rest = functions[0], functions[1:]
        if head.is_zero():
            raise LinearlyDependent("Input functions are linearly dependent")
        pivot = min(head.support)
        pivot_value = head.coord(pivot)
        if not rest:
            return [scale_vec(1 / pivot_value, head)], [pivot]

        cleared = [sub_vec(h, scale_vec(h.coord(pivot) / pivot_value, head)) for h in rest]
        rest_basis, rest_points = self._build(cleared)

        g = head
        for f, point in zip(rest_basis, rest_points):
            g = sub_vec(g, scale_vec(head.coord(point), f))
        return [scale_vec(1 / g.coord(pivot), g)] + rest_basis, [pivot] + rest_points


def delta_basis(family: FunctionFamily) -> DeltaBasis:
    return DeltaBasisBuilder().build(family)


def solve_combination(target: FinSuppVector, functions: Sequence[FinSuppVector]) -> Optional[List[Scalar]]:
    """Coefficients c with target = sum c_i functions[i], found by exact elimination, or None."""
    if not functions:
        return [] if target.is_zero() else None
    points = sorted(target.support.union(*(f.support for f in functions)))
    if not points:
        return [Scalar(0)] * len(functions)
    matrix = [[f.coord(point) for f in functions] for point in points]
    return linalg.solve(matrix, [target.coord(point) for point in points])


def spans_equal(left: Sequence[FinSuppVector], right: Sequence[FinSuppVector]) -> bool:
    """Exact mutual expressibility of two finite families."""
    return all(solve_combination(v, right) is not None for v in left) and all(
        solve_combination(v, left) is not None for v in right
    )


def express_in_basis(target: FinSuppVector, basis: DeltaBasis) -> Optional[List[Scalar]]:
    """Coordinates of ``target`` in a delta basis: its values at the points, or None off the span."""
    coefficients = [target.coord(point) for point in basis.points]
    combination = FinSuppVector.zero()
    for coefficient, f in zip(coefficients, basis.basis):
        combination = add_vec(combination, scale_vec(coefficient, f))
    return coefficients if combination == target else None
