from fractions import Fraction

import pytest
from hypothesis import given

from src.exceptions import (
    IncompleteImages,
    InconsistentScaling,
    NotAtomColumn,
    NotInjective,
    NotMultiplicative,
    NotPositive,
    NotRankOne,
)
from src.models.automorphism import AutomorphismImages, PermDiag
from src.models.operator import Operator
from src.services.automorphism.factorizer import AutomorphismFactorizer, factor_automorphism, factor_rank_one
from src.services.automorphism.permdiag import (
    apply_permdiag,
    build_images,
    complete_permutation,
    diagonal_operator,
    invert_permdiag,
    normalize_permdiag,
    permdiag_norms,
    permdiag_operator,
    permutation_operator,
    restrict_permdiag,
    truncation_commutes,
)
from src.services.operator.algebra import compose, matrix_unit, scale_op
from src.services.operator.lattice import is_positive_op
from src.services.operator.structure import invert
from tests.helpers import LABELS, op, operators, permdiags, random_operator, random_permdiag

SWAP = PermDiag.from_mappings({"a": "b", "b": "a"}, {"a": 1, "b": 2})


def images(support, entries):
    return AutomorphismImages.from_mapping(support, {index: op(value) for index, value in entries.items()})


class TestPermDiagModel:
    def test_fixed_points_are_dropped(self):
        pd = PermDiag.from_mappings({"a": "a", "b": "c", "c": "b"}, {})
        assert pd.pi == (("b", "c"), ("c", "b"))
        assert pd.permute("a") == "a"
        assert pd.unpermute("c") == "b"

    def test_delta_defaults_to_one(self):
        assert SWAP.coefficient("z") == 1

    def test_pi_must_be_a_bijection(self):
        with pytest.raises(ValueError):
            PermDiag.from_mappings({"a": "b"}, {})

    def test_delta_must_be_positive(self):
        with pytest.raises(ValueError):
            PermDiag.from_mappings({}, {"a": 0})


class TestBuildImages:
    def test_swap_with_scaling(self):
        imgs = build_images(SWAP, ["a", "b"])
        assert imgs.image("a", "a") == matrix_unit("b", "b")
        assert imgs.image("a", "b") == scale_op(Fraction(1, 2), matrix_unit("b", "a"))
        assert imgs.image("b", "a") == scale_op(2, matrix_unit("a", "b"))

    def test_images_must_be_total(self):
        with pytest.raises(IncompleteImages) as excinfo:
            AutomorphismImages.from_mapping(["a", "b"], {("a", "a"): matrix_unit("a", "a")})
        assert excinfo.value.labels == ("a", "b")

    def test_images_outside_the_support_are_rejected(self):
        with pytest.raises(ValueError):
            AutomorphismImages.from_mapping(
                ["a"], {("a", "a"): matrix_unit("a", "a"), ("a", "b"): matrix_unit("a", "b")}
            )


class TestFactorRankOne:
    def test_factors(self):
        factors = factor_rank_one(op({("a", "b"): 2, ("a", "c"): 4, ("d", "b"): 6, ("d", "c"): 12}))
        assert factors.gamma_ratio == 2
        assert factors.u.entries == {"a": 1, "d": 3}
        assert factors.psi.entries == {"b": 1, "c": 2}
        assert factors.outer() == op({("a", "b"): 2, ("a", "c"): 4, ("d", "b"): 6, ("d", "c"): 12})

    def test_mixed_signs(self):
        with pytest.raises(NotPositive):
            factor_rank_one(op({("a", "b"): 1, ("a", "c"): -1}), ("a", "b"))

    def test_scalar_part(self):
        with pytest.raises(NotRankOne):
            factor_rank_one(op(scalar=1))

    def test_zero(self):
        with pytest.raises(NotRankOne):
            factor_rank_one(Operator())


class TestFactor:
    def test_swap_example(self):
        assert factor_automorphism(build_images(SWAP, ["a", "b"])) == SWAP

    def test_identity(self):
        assert factor_automorphism(build_images(PermDiag.identity(), ["a", "b", "c"])) == PermDiag.from_mappings(
            {}, {"a": 1, "b": 1, "c": 1}
        )

    def test_empty_support(self):
        assert factor_automorphism(AutomorphismImages.from_mapping([], {})) == PermDiag.identity()

    def test_partial_permutation_is_completed(self):
        pd = PermDiag.from_mappings({"a": "c", "c": "a"}, {})
        result = factor_automorphism(build_images(pd, ["a", "b"]))
        assert result.pi_map == {"a": "c", "c": "a"}

    def test_round_trip(self, rng):
        for _ in range(200):
            pd = random_permdiag(rng, rng.sample(LABELS + ["f", "g", "h"], rng.randint(1, 8)))
            support = [label for label, _ in pd.delta]
            assert factor_automorphism(build_images(pd, support)) == normalize_permdiag(pd)

    @given(permdiags())
    def test_round_trip_on_any_support(self, pd):
        support = ["a", "b", "c"]
        assert factor_automorphism(build_images(pd, support)) == restrict_permdiag(pd, support)

    def test_unnormalized_output(self):
        factorizer = AutomorphismFactorizer(normalize_output=False)
        pd = PermDiag.from_mappings({}, {"a": 2, "b": 6})
        assert factorizer.factor(build_images(pd, ["a", "b"])).delta_map == {"a": 1, "b": 3}


class TestFactorErrors:
    def test_negative_entry(self):
        imgs = images(["a"], {("a", "a"): {("a", "b"): 1, ("b", "a"): -1}})
        with pytest.raises(NotPositive) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.labels == ("a", "a")

    def test_rank_two_image(self):
        imgs = images(["a"], {("a", "a"): {("a", "a"): 1, ("b", "b"): 1}})
        with pytest.raises(NotRankOne):
            factor_automorphism(imgs)

    def test_image_with_scalar_part(self):
        imgs = AutomorphismImages.from_mapping(["a"], {("a", "a"): op(scalar=1)})
        with pytest.raises(NotRankOne):
            factor_automorphism(imgs)

    def test_column_spread_over_two_atoms(self):
        imgs = images(["a"], {("a", "a"): {("a", "a"): 1, ("b", "a"): 1}})
        with pytest.raises(NotAtomColumn) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.labels == ("a",)
        assert excinfo.value.factor == "column"

    def test_row_spread_over_two_atoms(self):
        imgs = images(["a"], {("a", "a"): {("a", "a"): 1, ("a", "b"): 1}})
        with pytest.raises(NotAtomColumn) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.factor == "row"

    def test_diagonal_image_is_not_idempotent(self):
        imgs = images(["a"], {("a", "a"): {("a", "a"): 2}})
        with pytest.raises(NotMultiplicative) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.labels == ("a", "a", "a")

    def test_two_labels_on_one_atom(self):
        unit = {("c", "c"): 1}
        imgs = images(["a", "b"], {("a", "a"): unit, ("a", "b"): unit, ("b", "a"): unit, ("b", "b"): unit})
        with pytest.raises(NotInjective) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.labels == ("a", "b")

    def test_inconsistent_ratios(self):
        imgs = images(
            ["a", "b"],
            {
                ("a", "a"): {("a", "a"): 1},
                ("a", "b"): {("a", "b"): 2},
                ("b", "a"): {("b", "a"): 1},
                ("b", "b"): {("b", "b"): 1},
            },
        )
        with pytest.raises(InconsistentScaling) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.labels == ("a", "b", "a")

    def test_products_disagree(self):
        imgs = images(
            ["a", "b"],
            {
                ("a", "a"): {("a", "a"): 1},
                ("a", "b"): {("a", "a"): 1, ("a", "b"): 1},
                ("b", "a"): {("b", "a"): 1},
                ("b", "b"): {("b", "b"): 1},
            },
        )
        with pytest.raises(NotMultiplicative) as excinfo:
            factor_automorphism(imgs)
        assert excinfo.value.labels == ("a", "b", "b")

    @pytest.mark.parametrize(
        "stray, labels",
        [({("a", "a"): 1, ("a", "b"): 1}, ("a", "b", "b")), ({("a", "b"): 1, ("b", "b"): 1}, ("a", "a", "b"))],
    )
    def test_stray_entries_without_the_triple_check(self, stray, labels):
        imgs = images(
            ["a", "b"],
            {("a", "a"): {("a", "a"): 1}, ("a", "b"): stray, ("b", "a"): {("b", "a"): 1}, ("b", "b"): {("b", "b"): 1}},
        )
        with pytest.raises(NotMultiplicative) as excinfo:
            AutomorphismFactorizer(check_multiplicativity=False).factor(imgs)
        assert excinfo.value.labels == labels

    def test_triple_check_switched_off(self, rng):
        factorizer = AutomorphismFactorizer(check_multiplicativity=False)
        for _ in range(50):
            pd = random_permdiag(rng, rng.sample(LABELS, rng.randint(1, 5)))
            support = [label for label, _ in pd.delta]
            result = factorizer.factor(build_images(pd, support))
            assert build_images(result, support) == build_images(pd, support)


class TestApplyAndInvert:
    def test_apply_example(self):
        assert apply_permdiag(SWAP, op({("a", "b"): 4}, scalar=1)) == op({("b", "a"): 2}, scalar=1)

    @given(permdiags(), operators, operators)
    def test_apply_is_an_algebra_homomorphism(self, pd, t, s):
        assert apply_permdiag(pd, compose(t, s)) == compose(apply_permdiag(pd, t), apply_permdiag(pd, s))

    @given(permdiags(), operators)
    def test_inverse_undoes_apply(self, pd, t):
        inverse = invert_permdiag(pd)
        assert apply_permdiag(inverse, apply_permdiag(pd, t)) == t
        assert apply_permdiag(pd, apply_permdiag(inverse, t)) == t

    @given(permdiags(), operators)
    def test_apply_is_conjugation_by_pd(self, pd, t):
        pd_op = permdiag_operator(pd)
        assert apply_permdiag(pd, t) == compose(compose(pd_op, t), invert(pd_op))

    def test_apply_and_inverse_preserve_positivity(self, rng):
        pds = [random_permdiag(rng, rng.sample(LABELS, rng.randint(1, 5))) for _ in range(50)]
        for _ in range(100):
            t = random_operator(rng, LABELS, rng.randint(0, 6), positive=True)
            pd = rng.choice(pds)
            assert is_positive_op(apply_permdiag(pd, t))
            assert is_positive_op(apply_permdiag(invert_permdiag(pd), t))

    @given(permdiags(), operators)
    def test_positivity_is_preserved_both_ways(self, pd, t):
        assert is_positive_op(apply_permdiag(pd, t)) == is_positive_op(t)
        assert is_positive_op(apply_permdiag(invert_permdiag(pd), t)) == is_positive_op(t)


class TestPermDiagOperators:
    def test_permutation_operator(self):
        swap = op({("a", "a"): -1, ("b", "b"): -1, ("a", "b"): 1, ("b", "a"): 1}, scalar=1)
        assert permutation_operator(SWAP) == swap

    def test_diagonal_operator(self):
        assert diagonal_operator(SWAP) == op({("b", "b"): 1}, scalar=1)

    @given(permdiags())
    def test_pd_is_p_times_d(self, pd):
        assert permdiag_operator(pd) == compose(permutation_operator(pd), diagonal_operator(pd))

    def test_norms(self):
        pd = PermDiag.from_mappings({"a": "b", "b": "a"}, {"a": Fraction(1, 3), "b": 2})
        assert permdiag_norms(pd) == (1, 2, 3)

    def test_complete_permutation(self):
        assert complete_permutation({"a": "c", "b": "d"}) == {"a": "c", "b": "d", "c": "a", "d": "b"}
        assert complete_permutation({"a": "b", "b": "a"}) == {"a": "b", "b": "a"}


class TestTruncationCommutes:
    def test_random_permdiags(self, rng):
        for _ in range(100):
            pd = random_permdiag(rng, rng.sample(LABELS, rng.randint(1, 5)))
            t = random_operator(rng, LABELS, rng.randint(0, 6), positive=True)
            assert truncation_commutes(pd, t, rng.sample(LABELS, rng.randint(0, 5)))
