"""Order duals of R^n_Lex and of lexicographic products X∘Y.

Every order bounded functional vanishes on infinitely small vectors. In
R^n_Lex the vectors e_2, ..., e_n are infinitely small with respect to
e_1, so the order dual is one-dimensional, and on X∘Y an order bounded
functional is zero on the tail Y.
"""

from typing import Tuple

from src.exceptions import DimensionMismatch, IsBounded, NotOrderBounded
from src.models.lex import HeadOrder, LexFunctional, LexVector
from src.models.scalar import ZERO, Scalar, ScalarLike, as_scalar
from src.models.vector import FinSuppVector


def evaluate(phi: LexFunctional, x: LexVector) -> Scalar:
    if phi.dimension != x.dimension:
        raise DimensionMismatch(f"Functional of dimension {phi.dimension} applied to vector of length {x.dimension}")
    return sum((c * value for c, value in zip(phi.coeffs, x.coords)), ZERO)


def is_order_bounded_lex(phi: LexFunctional) -> bool:
    """phi is order bounded on R^n_Lex iff it vanishes on e_2, ..., e_n."""
    return all(c == ZERO for c in phi.coeffs[1:])


def lex_dual_image(phi: LexFunctional) -> Scalar:
    """Image phi(e_1) of an order bounded functional in the order dual R."""
    if not is_order_bounded_lex(phi):
        raise NotOrderBounded(f"Functional {phi.coeffs} does not vanish on e_2..e_n")
    return phi.coeffs[0]


def unboundedness_witness(phi: LexFunctional, bound: ScalarLike) -> LexVector:
    """Return x with 0 <=_Lex x <=_Lex e_1 and |phi(x)| > bound.

    Takes the first index k >= 2 with c_k != 0 and returns t*e_k with
    t = (max(bound, 0) + 1) / |c_k| > 0.

    :raises IsBounded: If phi is order bounded
    """
    if is_order_bounded_lex(phi):
        raise IsBounded(f"Functional {phi.coeffs} is order bounded; no witness exists")
    bound = as_scalar(bound)
    k, c_k = next((i, c) for i, c in enumerate(phi.coeffs) if i >= 1 and c != ZERO)
    t = (max(bound, ZERO) + 1) / abs(c_k)
    return LexVector(tuple(t if i == k else ZERO for i in range(phi.dimension)))


def product_dual_restrict(phi_head: Tuple[ScalarLike, ...], phi_tail: FinSuppVector) -> Tuple[Scalar, ...]:
    """Restriction phi -> phi|_X of a functional on X∘Y.

    :raises NotOrderBounded: If phi does not vanish on the tail Y
    """
    if not phi_tail.is_zero():
        raise NotOrderBounded(f"Functional is nonzero on the tail at {sorted(phi_tail.support)}")
    return tuple(as_scalar(c) for c in phi_head)


def product_dual_image(
    phi_head: Tuple[ScalarLike, ...], phi_tail: FinSuppVector, head_order: HeadOrder
) -> Tuple[Scalar, ...]:
    """Image of phi in the order dual of the head.

    A coordinatewise head R^n gives (phi(e_1), ..., phi(e_n)); a lexicographic
    head gives the single value phi(e_1).
    """
    restricted = product_dual_restrict(phi_head, phi_tail)
    if head_order == HeadOrder.COORDINATEWISE:
        return restricted
    return (lex_dual_image(LexFunctional(restricted)),)


def is_positive_head_functional(phi_head: Tuple[ScalarLike, ...], head_order: HeadOrder) -> bool:
    """Whether phi is positive on the head space."""
    coeffs = tuple(as_scalar(c) for c in phi_head)
    if head_order == HeadOrder.COORDINATEWISE:
        return all(c >= ZERO for c in coeffs)
    return is_order_bounded_lex(LexFunctional(coeffs)) and coeffs[0] >= ZERO
