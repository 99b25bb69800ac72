"""Lexicographic order on R^n and on products X∘Y with tail c00(Λ)."""

from src.exceptions import DimensionMismatch, NotALattice
from src.models.lex import HeadOrder, LexProductElement, LexVector, Ordering
from src.models.scalar import ZERO
from src.services.lattice.vectors import lattice_inf_vec, lattice_sup_vec, vec_leq


def _check_dimensions(x: LexVector, y: LexVector) -> None:
    if x.dimension != y.dimension:
        raise DimensionMismatch(f"Cannot compare vectors of lengths {x.dimension} and {y.dimension}")


def lex_compare(x: LexVector, y: LexVector) -> Ordering:
    """The first differing coordinate decides."""
    _check_dimensions(x, y)
    for s, t in zip(x.coords, y.coords):
        if s < t:
            return Ordering.LT
        if s > t:
            return Ordering.GT
    return Ordering.EQ


def lex_leq(x: LexVector, y: LexVector) -> bool:
    return lex_compare(x, y) != Ordering.GT


def is_positive_lex(x: LexVector) -> bool:
    """Zero, or the first nonzero coordinate is positive."""
    leading = x.leading_index()
    return leading == 0 or x.coords[leading - 1] > ZERO


def lex_sup(x: LexVector, y: LexVector) -> LexVector:
    return y if lex_compare(x, y) == Ordering.LT else x


def lex_inf(x: LexVector, y: LexVector) -> LexVector:
    return x if lex_compare(x, y) == Ordering.LT else y


def is_infinitely_small(x: LexVector, y: LexVector) -> bool:
    """Whether 0 <= n*x <= y for every natural n.

    For nonzero x this happens exactly when y is strictly positive and its
    leading coordinate comes before the leading coordinate of x.
    """
    _check_dimensions(x, y)
    if not is_positive_lex(x) or not is_positive_lex(y):
        return False
    if x.leading_index() == 0:
        return True
    return y.leading_index() != 0 and y.leading_index() < x.leading_index()


def _head_leq(x: LexVector, y: LexVector, head_order: HeadOrder) -> bool:
    _check_dimensions(x, y)
    if head_order == HeadOrder.LEX:
        return lex_leq(x, y)
    return all(s <= t for s, t in zip(x.coords, y.coords))


def _require_same_head_order(x: LexProductElement, y: LexProductElement) -> HeadOrder:
    if x.head_order != y.head_order:
        raise DimensionMismatch(f"Products with {x.head_order.value} and {y.head_order.value} heads are not comparable")
    return x.head_order


def product_leq(x: LexProductElement, y: LexProductElement) -> bool:
    """(x1, y1) <= (x2, y2) iff x1 < x2, or x1 = x2 and y1 <= y2."""
    head_order = _require_same_head_order(x, y)
    if x.head == y.head:
        return vec_leq(x.tail, y.tail)
    return _head_leq(x.head, y.head, head_order)


def is_positive_product(x: LexProductElement) -> bool:
    zero = LexProductElement(LexVector.zero(x.head.dimension), head_order=x.head_order)
    return product_leq(zero, x)


def _require_lattice(x: LexProductElement, y: LexProductElement) -> None:
    if _require_same_head_order(x, y) != HeadOrder.LEX:
        raise NotALattice("Lattice operations on X∘Y need a totally ordered head")


def product_sup(x: LexProductElement, y: LexProductElement) -> LexProductElement:
    _require_lattice(x, y)
    if x.head == y.head:
        return LexProductElement(x.head, lattice_sup_vec(x.tail, y.tail), x.head_order)
    return y if lex_compare(x.head, y.head) == Ordering.LT else x


def product_inf(x: LexProductElement, y: LexProductElement) -> LexProductElement:
    _require_lattice(x, y)
    if x.head == y.head:
        return LexProductElement(x.head, lattice_inf_vec(x.tail, y.tail), x.head_order)
    return x if lex_compare(x.head, y.head) == Ordering.LT else y
