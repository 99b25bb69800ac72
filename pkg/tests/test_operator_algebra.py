import pytest
from hypothesis import given

from src.models.operator import Operator
from src.models.vector import FinSuppVector
from src.services.lattice.vectors import add_vec
from src.services.operator.algebra import (
    add_op,
    apply,
    commutator,
    compose,
    identity_op,
    matrix_unit,
    neg_op,
    scale_op,
    sub_op,
)
from tests.helpers import op, operators, vec, vectors


class TestCanonicalForm:
    def test_zero_entries_are_dropped(self):
        assert op({("a", "b"): 0}) == Operator()

    def test_direct_construction_must_be_canonical(self):
        with pytest.raises(ValueError):
            Operator(items=((("b", "a"), 1), (("a", "a"), 1)))

    def test_full_entry_includes_scalar_on_the_diagonal(self):
        t = op({("a", "a"): 2, ("a", "b"): 3}, scalar=1)
        assert t.entry("a", "a") == 3
        assert t.entry("a", "b") == 3
        assert t.entry("z", "z") == 1
        assert t.matrix_entry("z", "z") == 0


class TestApply:
    def test_matrix_unit_moves_an_atom(self):
        assert apply(matrix_unit("a", "b"), vec({"b": 3})) == vec({"a": 3})
        assert apply(matrix_unit("a", "b"), vec({"a": 3})) == FinSuppVector.zero()

    def test_scalar_part_acts_everywhere(self):
        t = op({("a", "b"): 1}, scalar=2)
        assert apply(t, vec({"b": 1, "z": 1})) == vec({"a": 1, "b": 2, "z": 2})

    @given(operators, operators, vectors)
    def test_apply_is_a_representation(self, t, s, x):
        assert apply(compose(t, s), x) == apply(t, apply(s, x))

    @given(operators, vectors, vectors)
    def test_apply_is_linear(self, t, x, y):
        assert apply(t, add_vec(x, y)) == add_vec(apply(t, x), apply(t, y))


class TestCompose:
    def test_matrix_units_multiply(self):
        assert compose(matrix_unit("a", "b"), matrix_unit("b", "c")) == matrix_unit("a", "c")
        assert compose(matrix_unit("a", "b"), matrix_unit("c", "a")) == Operator()

    def test_hull_product(self):
        t = op({("a", "b"): 1}, scalar=2)
        s = op({("b", "a"): 1}, scalar=3)
        assert compose(t, s) == op({("a", "b"): 3, ("b", "a"): 2, ("a", "a"): 1}, scalar=6)

    @given(operators)
    def test_identity_is_a_unit(self, t):
        assert compose(identity_op(), t) == t
        assert compose(t, identity_op()) == t

    @given(operators, operators, operators)
    def test_associative(self, t, s, r):
        assert compose(compose(t, s), r) == compose(t, compose(s, r))

    @given(operators, operators, operators)
    def test_distributive(self, t, s, r):
        assert compose(t, add_op(s, r)) == add_op(compose(t, s), compose(t, r))
        assert compose(add_op(s, r), t) == add_op(compose(s, t), compose(r, t))


class TestLinearOperations:
    @given(operators)
    def test_subtraction_cancels(self, t):
        assert sub_op(t, t) == Operator()
        assert add_op(t, neg_op(t)).is_zero()

    def test_scaling(self):
        assert scale_op(2, op({("a", "b"): 1}, scalar=1)) == op({("a", "b"): 2}, scalar=2)
        assert scale_op(0, op({("a", "b"): 1}, scalar=1)) == Operator()

    def test_commutator(self):
        assert commutator(matrix_unit("a", "b"), matrix_unit("b", "a")) == op({("a", "a"): 1, ("b", "b"): -1})

    @given(operators)
    def test_scalars_are_central(self, t):
        assert commutator(identity_op(3), t) == Operator()
