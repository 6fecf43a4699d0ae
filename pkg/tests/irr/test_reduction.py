from galoiskit.domains import PrimeField
from galoiskit.irr.reduction import possible_factor_degrees, reduce_mod, reduction_test
from galoiskit.utils import primes_up_to
from tests.utils import poly


class TestReduceMod:
    def test(self):
        assert reduce_mod(poly(8, 0, -6, -1), 5) == poly(3, 0, 4, 4, domain=PrimeField(5))


class TestReductionTest:
    def test(self):
        # mod 2 the degree drops, mod 3 the cubic has the root -1
        assert reduction_test(poly(8, 0, -6, -1), [2, 3, 5]) == 5

    def test_none(self):
        assert reduction_test(poly(8, 0, -6, -1), [2, 3]) is None

    def test_reducible_everywhere(self):
        assert reduction_test(poly(1, 0, -10, 0, 1), [2, 3, 5, 7, 11, 13]) is None

    def test_quintic(self):
        assert reduction_test(poly(1, 0, 0, 0, -4, 2), [3]) == 3
        assert reduction_test(poly(1, 0, 0, 0, 1, 1), [2]) is None


class TestPossibleFactorDegrees:
    def test_irreducible_without_irreducible_reduction(self):
        # minimal polynomial of 2^(1/3) + w: patterns 2+2+2 and 3+3 only
        f = poly(1, 3, 6, 3, 0, 9, 9)
        assert reduction_test(f, primes_up_to(97)) is None
        assert possible_factor_degrees(f, primes_up_to(97)) == {0, 6}

    def test_reducible(self):
        f = poly(1, 0, 0, -54) * poly(1, 0, 0, 0, 0, 0, 108)
        assert {0, 3, 6, 9} <= possible_factor_degrees(f, primes_up_to(97))

    def test_single_prime(self):
        # (x^2 + x + 2)(x^2 + 2x + 2) mod 3
        assert possible_factor_degrees(poly(1, 0, 0, 0, 1), [3]) == {0, 2, 4}

    def test_no_usable_prime(self):
        assert possible_factor_degrees(poly(2, 0, 1), [2]) == {0, 1, 2}
