import pytest
from dirty_equals import IsPartialDict
from hypothesis import assume, given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from galoiskit.domains import QQ
from galoiskit.galois import (
    ClassificationUnknown,
    classify_cycle_types,
    cycle_type_samples,
    galois_group,
    galois_group_cubic,
    galois_group_quadratic,
    is_solvable_by_radicals,
    splitting_degree,
)
from galoiskit.galois.classify import TRANSITIVE_GROUPS, candidate_groups, cyclotomic_prime
from galoiskit.galois.grid import trinomial
from galoiskit.irr import Verdict, is_irreducible_q
from galoiskit.permgrp import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    frobenius_group_20,
    klein_four_group,
    symmetric_group,
)
from galoiskit.poly import Polynomial, cyclotomic_p, discriminant
from tests.utils import poly

NAMED_GROUPS = {
    "C3": lambda: cyclic_group(3),
    "S3": lambda: symmetric_group(3),
    "V4": klein_four_group,
    "C4": lambda: cyclic_group(4),
    "D4": lambda: dihedral_group(4),
    "A4": lambda: alternating_group(4),
    "S4": lambda: symmetric_group(4),
    "C5": lambda: cyclic_group(5),
    "D5": lambda: dihedral_group(5),
    "F20": frobenius_group_20,
    "A5": lambda: alternating_group(5),
    "S5": lambda: symmetric_group(5),
}


class TestTransitiveGroups:
    @pytest.mark.parametrize(
        ("degree", "label"),
        [(n, label) for n, groups in TRANSITIVE_GROUPS.items() for label in groups],
    )
    def test_table_matches_permutation_groups(self, degree: int, label: str):
        even, types = TRANSITIVE_GROUPS[degree][label]
        G = NAMED_GROUPS[label]()
        assert G.degree == degree
        assert G.is_transitive()
        assert all(p.is_even() for p in G.elements) == even
        assert G.cycle_types() - {(1,) * degree} == types


class TestClosedForms:
    def test_quadratic(self):
        assert galois_group_quadratic(poly(1, 0, -2)).label == "C2"
        assert galois_group_quadratic(poly(1, -3, 2)).label == "Trivial"

    def test_cubic(self):
        assert galois_group_cubic(poly(1, 0, 0, -2)).label == "S3"
        assert galois_group_cubic(poly(1, 0, -3, 1)).label == "C3"
        assert galois_group_cubic(poly(1, 0, 0, -1)).label == "C2"
        assert galois_group_cubic(poly(1, -6, 11, -6)).label == "Trivial"

    def test_cubic_discriminant(self):
        cls = galois_group_cubic(poly(1, 0, -3, 1))
        assert cls.discriminant == 81
        assert cls.disc_square

    def test_degree_mismatch(self):
        with pytest.raises(ValueError, match="degree 2"):
            galois_group_quadratic(poly(1, 0, 0, -2))

    def test_repeated_root(self):
        with pytest.raises(ValueError, match="repeated root"):
            galois_group_quadratic(poly(1, -2, 1))

    @pytest.mark.parametrize(
        "coeffs", [(1, 0, 0, -2), (1, 0, -3, 1), (1, 0, -4, 2), (2, 0, -6, -1)]
    )
    def test_cubic_rule_agrees_with_sampling(self, coeffs: tuple[int, ...]):
        f = poly(*coeffs)
        cls = galois_group_cubic(f)
        observed = {s.partition for s in cycle_type_samples(f, 50)}
        assert classify_cycle_types(3, cls.disc_square, observed) == cls.label


class TestClassifyCycleTypes:
    def test_single_candidate(self):
        assert classify_cycle_types(5, False, [(3, 2)]) == "S5"
        assert classify_cycle_types(4, True, [(3, 1)]) == "A4"

    def test_exact_match(self):
        assert classify_cycle_types(5, False, [(5,), (4, 1), (2, 2, 1)]) == "F20"
        assert classify_cycle_types(4, True, [(2, 2)]) == "V4"
        assert classify_cycle_types(5, True, [(5,), (1, 1, 1, 1, 1)]) == "C5"

    def test_unknown(self):
        with pytest.raises(ClassificationUnknown) as exc_info:
            classify_cycle_types(4, False, [(2, 2)])
        assert exc_info.value.candidates == ("C4", "D4", "S4")

    def test_candidates(self):
        assert candidate_groups(4, False, [(4,)]) == ["C4", "D4", "S4"]
        assert candidate_groups(5, True, [(3, 1, 1)]) == ["A5"]
        assert candidate_groups(5, True, [(4, 1)]) == []


class TestGaloisGroup:
    @pytest.mark.parametrize(
        ("coeffs", "label", "order"),
        [
            ((1, 0, -2), "C2", 2),
            ((1, 0, 0, -2), "S3", 6),
            ((1, 0, -3, 1), "C3", 3),
            ((1, 0, 0, 0, 0, -2), "F20", 20),
            ((1, 0, 0, 0, -4, 2), "S5", 120),
            ((1, 0, 0, 0, 1), "V4", 4),
            ((1, 0, 0, 0, -2), "D4", 8),
            ((1, 0, 0, 8, 12), "A4", 12),
        ],
    )
    def test(self, coeffs: tuple[int, ...], label: str, order: int):
        cls = galois_group(poly(*coeffs))
        assert (cls.label, cls.order) == (label, order)

    def test_cyclotomic(self):
        assert galois_group(cyclotomic_p(5)).model_dump() == IsPartialDict(
            label="C4", order=4, solvable=True, degree=4
        )
        assert galois_group(cyclotomic_p(7)).order == 6
        assert galois_group(cyclotomic_p(13)).label == "C12"

    def test_cyclotomic_prime(self):
        assert cyclotomic_prime(cyclotomic_p(11)) == 11
        assert cyclotomic_prime(poly(3, 3, 3)) == 3
        assert cyclotomic_prime(poly(1, 1, 2)) is None

    def test_insoluble(self):
        cls = galois_group(poly(1, 0, 0, 0, -4, 2))
        assert not cls.solvable
        assert not cls.disc_square
        assert cls.discriminant == -212144

    def test_scaling_invariance(self):
        f = poly(1, 0, 0, 0, -4, 2)
        assert galois_group(f * 3).label == galois_group(f).label
        assert galois_group(poly(1, 0, 0, -2) * 5).label == "S3"

    @pytest.mark.parametrize(
        ("factors", "order"),
        [
            ([(1, 0, -2), (1, 0, -3)], 4),
            ([(1, 0, -2), (1, 0, -8)], 2),
            ([(1, 0, -2), (1, 0, 0, -2)], 12),
            ([(1, 0, 3), (1, 0, 0, -2)], 6),
            ([(1, 1), (1, 0, 0, -2)], 6),
            ([(1, -1), (1, 1), (1, 0, 1)], 2),
        ],
    )
    def test_reducible(self, factors: list[tuple[int, ...]], order: int):
        f = poly(1)
        for coeffs in factors:
            f *= poly(*coeffs)
        cls = galois_group(f)
        assert cls.label == "Reducible"
        assert cls.order == order
        assert len(cls.factors) == len(factors)

    def test_sampling_cap(self):
        with pytest.raises(ClassificationUnknown) as exc_info:
            galois_group(poly(1, 0, 0, 0, 0, -2), max_primes=1)
        assert exc_info.value.candidates == ("F20", "S5")

    def test_cycle_types_reported(self):
        cls = galois_group(poly(1, 0, 0, 0, 0, -2))
        assert set(cls.cycle_types) == {(5,), (4, 1), (2, 2, 1)}

    def test_unsupported_degree(self):
        with pytest.raises(ValueError, match="limited to degree 5"):
            galois_group(poly(1, 0, 0, 0, 0, 0, -2))

    def test_constant(self):
        with pytest.raises(ValueError, match="constant"):
            galois_group(poly(3))


class TestSolvability:
    def test(self):
        assert is_solvable_by_radicals(poly(1, 0, 0, 0, 0, -2))
        assert not is_solvable_by_radicals(poly(1, 0, 0, 0, -4, 2))

    def test_splitting_degree(self):
        assert splitting_degree(poly(1, 0, 0, -2)) == 6
        assert splitting_degree(poly(1, 0, -2)) == 2


quartics_and_quintics = (
    st.lists(st.integers(min_value=-6, max_value=6), min_size=5, max_size=6)
    .filter(lambda coeffs: coeffs[-1] != 0)
    .map(lambda coeffs: Polynomial(coeffs, QQ))
)


def classify_or_none(f: Polynomial):
    try:
        return galois_group(f)
    except ClassificationUnknown:
        return None


class TestGroupInvariants:
    @hypothesis_settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=-40, max_value=40), st.integers(min_value=-40, max_value=40))
    def test_irreducible_quintic_order_divisible_by_five(self, a: int, b: int):
        f = trinomial(a, b)
        assume(discriminant(f) != 0)
        assume(is_irreducible_q(f).verdict == Verdict.irreducible)
        cls = classify_or_none(f)
        assume(cls is not None)
        assert cls.order % 5 == 0

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(quartics_and_quintics)
    def test_square_discriminant_lies_in_alternating_group(self, f: Polynomial):
        assume(discriminant(f) != 0)
        cls = classify_or_none(f)
        assume(cls is not None and cls.label != "Reducible")
        even, _ = TRANSITIVE_GROUPS[cls.degree][cls.label]
        assert even == cls.disc_square
