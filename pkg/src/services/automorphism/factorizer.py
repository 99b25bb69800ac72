import logging
from typing import Dict, Optional, Tuple

from src.exceptions import (
    InconsistentScaling,
    NotAtomColumn,
    NotInjective,
    NotMultiplicative,
    NotPositive,
    NotRankOne,
)
from src.models.automorphism import AutomorphismImages, PermDiag, RankOneFactors
from src.models.operator import Operator
from src.models.scalar import ZERO, Scalar
from src.models.vector import AtomLabel, FinSuppVector
from src.services.automorphism.permdiag import complete_permutation, normalize_permdiag
from src.services.operator import linalg
from src.services.operator.algebra import compose
from src.services.operator.structure import to_dense

logger = logging.getLogger(__name__)


def factor_rank_one(f: Operator, labels: Tuple[AtomLabel, ...] = ()) -> RankOneFactors:
    """Split a positive rank-one operator into F = gamma_ratio * (u (x) psi).

    :param f: Operator in A0
    :param labels: Matrix unit (a, b) whose image ``f`` is, for diagnostics only
    :returns: Positive factors with leading entries normalized to 1
    :raises NotRankOne: If ``f`` has a scalar part or its matrix rank is not 1
    :raises NotPositive: If the factors cannot both be chosen positive
    """
    if f.scalar != ZERO:
        raise NotRankOne(*labels, message=f"Image {labels} has scalar part {f.scalar} and infinite rank")
    rows, cols = sorted(f.rows), sorted(f.cols)
    if linalg.rank(to_dense(f, rows, cols)) != 1:
        raise NotRankOne(*labels, message=f"Image {labels} is not a rank-one operator")

    first_row = rows[0]
    first_col = next(col for col in cols if f.matrix_entry(first_row, col) != ZERO)
    gamma = f.matrix_entry(first_row, first_col)
    u = FinSuppVector.from_mapping({row: f.matrix_entry(row, first_col) / gamma for row in rows})
    psi = FinSuppVector.from_mapping({col: f.matrix_entry(first_row, col) / gamma for col in cols})
    if gamma < ZERO or any(value < ZERO for _, value in u.items) or any(value < ZERO for _, value in psi.items):
        raise NotPositive(*labels, message=f"Image {labels} has no positive rank-one factorization")
    return RankOneFactors(u=u, psi=psi, gamma_ratio=gamma)


class AutomorphismFactorizer:
    """Recovers the PermDiag form of a positive automorphism from its matrix-unit images.

    Validation runs in stages over the whole support: entry signs, rank one,
    atomic factors and idempotence of F_aa, injectivity of pi, the delta
    ratio cocycle, the placement of every F_ab on the single entry
    (pi(a), pi(b)), and finally F_ab F_bc = F_ac over all triples.
    Only the last stage can be switched off.
    """

    def __init__(self, check_multiplicativity: bool = True, normalize_output: bool = True):
        """Initialize the factorizer.

        :param check_multiplicativity: Run the O(n^3) composition check over all triples
        :param normalize_output: Pin delta of the smallest support label to 1
        """
        self.check_multiplicativity = check_multiplicativity
        self.normalize_output = normalize_output

    def factor(self, imgs: AutomorphismImages) -> PermDiag:
        """Factor the images into a PermDiag.

        :param imgs: Images F_ab for all a, b in the support
        :returns: PermDiag with build_images(result, support) == imgs
        """
        support = imgs.support
        logger.info(f"Factoring automorphism images over {len(support)} labels")

        self._check_signs(imgs)
        factors = self._check_rank_one(imgs)
        pi = self._read_permutation(imgs, factors)
        self._check_injective(pi)
        ratios = self._read_ratios(imgs, pi)
        self._check_cocycle(support, ratios)
        self._check_placement(imgs, pi)
        if self.check_multiplicativity:
            self._check_multiplicative(imgs)

        delta = {a: ratios[(a, support[0])] for a in support} if support else {}
        result = PermDiag.from_mappings(complete_permutation(pi), delta)
        if self.normalize_output:
            result = normalize_permdiag(result)
        logger.info(f"Recovered permutation moving {len(result.pi)} labels")
        return result

    def _check_signs(self, imgs: AutomorphismImages) -> None:
        for (a, b), image in imgs.images:
            if image.scalar < ZERO or any(value < ZERO for _, value in image.items):
                logger.warning(f"Image of ({a}, {b}) has a negative entry")
                raise NotPositive(a, b, message=f"Image of ({a}, {b}) has a negative entry")

    def _check_rank_one(self, imgs: AutomorphismImages) -> Dict[Tuple[AtomLabel, AtomLabel], RankOneFactors]:
        return {(a, b): factor_rank_one(image, (a, b)) for (a, b), image in imgs.images}

    def _read_permutation(
        self, imgs: AutomorphismImages, factors: Dict[Tuple[AtomLabel, AtomLabel], RankOneFactors]
    ) -> Dict[AtomLabel, AtomLabel]:
        pi: Dict[AtomLabel, AtomLabel] = {}
        for a in imgs.support:
            diagonal = factors[(a, a)]
            if len(diagonal.u) != 1:
                raise NotAtomColumn(a, message=f"Column factor of F_({a},{a}) is supported on {len(diagonal.u)} atoms")
            if len(diagonal.psi) != 1:
                raise NotAtomColumn(
                    a, factor="row", message=f"Row factor of F_({a},{a}) is supported on {len(diagonal.psi)} atoms"
                )
            image = imgs.image(a, a)
            if compose(image, image) != image:
                raise NotMultiplicative(a, a, a, message=f"F_({a},{a}) is not idempotent")
            (pi[a],) = diagonal.u.support
            logger.debug(f"pi({a}) = {pi[a]}")
        return pi

    def _check_injective(self, pi: Dict[AtomLabel, AtomLabel]) -> None:
        seen: Dict[AtomLabel, AtomLabel] = {}
        for a in sorted(pi):
            if pi[a] in seen:
                raise NotInjective(seen[pi[a]], a, message=f"{seen[pi[a]]} and {a} are both sent to {pi[a]}")
            seen[pi[a]] = a

    def _read_ratios(
        self, imgs: AutomorphismImages, pi: Dict[AtomLabel, AtomLabel]
    ) -> Dict[Tuple[AtomLabel, AtomLabel], Scalar]:
        return {(a, b): imgs.image(a, b).matrix_entry(pi[a], pi[b]) for a in imgs.support for b in imgs.support}

    def _check_cocycle(self, support, ratios: Dict[Tuple[AtomLabel, AtomLabel], Scalar]) -> None:
        for a in support:
            for b in support:
                for c in support:
                    if ratios[(a, b)] * ratios[(b, c)] != ratios[(a, c)]:
                        raise InconsistentScaling(
                            a, b, c, message=f"ratio({a},{b}) * ratio({b},{c}) != ratio({a},{c})"
                        )

    def _check_placement(self, imgs: AutomorphismImages, pi: Dict[AtomLabel, AtomLabel]) -> None:
        # F_ab must be a multiple of the single unit at (pi(a), pi(b))
        for (a, b), image in imgs.images:
            if image.rows != {pi[a]}:
                raise NotMultiplicative(a, a, b, message=f"F_({a},{a}) F_({a},{b}) != F_({a},{b})")
            if image.cols != {pi[b]}:
                raise NotMultiplicative(a, b, b, message=f"F_({a},{b}) F_({b},{b}) != F_({a},{b})")

    def _check_multiplicative(self, imgs: AutomorphismImages) -> None:
        for a in imgs.support:
            for b in imgs.support:
                left = imgs.image(a, b)
                for c in imgs.support:
                    if compose(left, imgs.image(b, c)) != imgs.image(a, c):
                        raise NotMultiplicative(a, b, c, message=f"F_({a},{b}) F_({b},{c}) != F_({a},{c})")


def factor_automorphism(imgs: AutomorphismImages, factorizer: Optional[AutomorphismFactorizer] = None) -> PermDiag:
    """Factor images with the given factorizer, or a default one."""
    return (factorizer or AutomorphismFactorizer()).factor(imgs)
