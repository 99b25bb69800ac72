"""Shared hypothesis strategies and builders for the test-suite."""

import random
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from hypothesis import strategies as st

from src.models.automorphism import PermDiag
from src.models.operator import Operator
from src.models.vector import FinSuppVector

LABELS = ["a", "b", "c", "d", "e"]

labels = st.sampled_from(LABELS)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonnegative_rationals = st.fractions(min_value=0, max_value=5, max_denominator=6)
positive_rationals = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6)

vectors = st.dictionaries(labels, rationals, max_size=5).map(FinSuppVector.from_mapping)
positive_vectors = st.dictionaries(labels, nonnegative_rationals, max_size=5).map(FinSuppVector.from_mapping)

matrices = st.dictionaries(st.tuples(labels, labels), rationals, max_size=6)
a0_operators = matrices.map(Operator.from_entries)
operators = st.builds(Operator.from_entries, matrices, rationals)
positive_operators = st.builds(
    Operator.from_entries,
    st.dictionaries(st.tuples(labels, labels), nonnegative_rationals, max_size=6),
    nonnegative_rationals,
)


@st.composite
def permdiags(draw, pool=LABELS):
    moved = draw(st.lists(st.sampled_from(pool), unique=True))
    shuffled = draw(st.permutations(moved))
    delta = draw(st.dictionaries(st.sampled_from(pool), positive_rationals))
    return PermDiag.from_mappings(dict(zip(moved, shuffled)), delta)


def op(entries: Mapping[Tuple[str, str], object] = None, scalar: object = 0) -> Operator:
    """Shorthand: op({("a", "b"): 2}, scalar=1) is I + 2*E_ab."""
    return Operator.from_entries(
        {index: Fraction(value) for index, value in (entries or {}).items()}, Fraction(scalar)
    )


def vec(entries: Mapping[str, object] = None) -> FinSuppVector:
    return FinSuppVector.from_mapping({label: Fraction(value) for label, value in (entries or {}).items()})


def random_rational(rng: random.Random, limit: int = 100, positive: bool = False) -> Fraction:
    numerator = rng.randint(1, limit) if positive else rng.randint(-limit, limit)
    return Fraction(numerator, rng.randint(1, limit))


def random_permdiag(rng: random.Random, support: Iterable[str]) -> PermDiag:
    """Random PermDiag whose permutation is a bijection of ``support``."""
    support = sorted(support)
    targets = support[:]
    rng.shuffle(targets)
    delta: Dict[str, Fraction] = {label: random_rational(rng, positive=True) for label in support}
    return PermDiag.from_mappings(dict(zip(support, targets)), delta)


def random_operator(rng: random.Random, pool, size: int, positive: bool = False, scalar: bool = True) -> Operator:
    entries = {}
    for _ in range(size):
        value = Fraction(rng.randint(0 if positive else -3, 3), rng.randint(1, 3))
        entries[(rng.choice(pool), rng.choice(pool))] = value
    c = Fraction(rng.randint(0 if positive else -2, 2)) if scalar else Fraction(0)
    return Operator.from_entries(entries, c)


