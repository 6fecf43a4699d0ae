import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoiskit.utils import (
    divisors,
    factorize,
    get_suggestion,
    is_power_of_two,
    is_prime,
    iter_primes,
    join_items,
    join_with_or,
    primes_up_to,
)


class TestJoinItems:
    def test(self):
        assert join_items([]) == "(none)"
        assert join_items(["a"]) == "'a'"
        assert join_items(["a", "b"]) == "'a' and 'b'"
        assert join_items(["a", "b", "c"]) == "'a', 'b' and 'c'"

    def test_unquoted(self):
        assert join_with_or(["2", "3", "5"], quote=False) == "2, 3 or 5"


class TestGetSuggestion:
    def test(self):
        assert get_suggestion("octahedrn", ["cube", "octahedron", "tetrahedron"]) == "octahedron"

    def test_no_choices(self):
        assert get_suggestion("cube", []) is None


class TestPrimes:
    def test_small(self):
        assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert primes_up_to(1) == []

    def test_iter_primes(self):
        primes = iter_primes(90)
        assert [next(primes) for _ in range(3)] == [97, 101, 103]

    @pytest.mark.parametrize("n", [-7, 0, 1, 561, 2**32 + 1, 3215031751])
    def test_composite(self, n: int):
        assert not is_prime(n)

    @pytest.mark.parametrize("n", [2, 65537, 2**31 - 1, 2**61 - 1])
    def test_prime(self, n: int):
        assert is_prime(n)

    @given(st.integers(min_value=2, max_value=10_000))
    def test_trial_division(self, n: int):
        assert is_prime(n) == all(n % d for d in range(2, int(n**0.5) + 1))


class TestFactorize:
    def test(self):
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert factorize(-17) == {17: 1}
        assert factorize(1) == {}
        assert factorize(0) == {}

    @given(st.integers(min_value=1, max_value=10**6))
    def test_product(self, n: int):
        product = 1
        for p, k in factorize(n).items():
            assert is_prime(p)
            product *= p**k
        assert product == n


class TestDivisors:
    def test(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(-9) == [1, 3, 9]
        assert divisors(0) == []


class TestIsPowerOfTwo:
    def test(self):
        assert [n for n in range(20) if is_power_of_two(n)] == [1, 2, 4, 8, 16]
