import pytest

from galoiskit.galois import cycle_type_samples
from galoiskit.galois.sampling import iter_cycle_types
from galoiskit.poly import discriminant
from tests.utils import poly


class TestCycleTypeSamples:
    def test(self):
        f = poly(1, 0, 0, 0, -4, 2)
        samples = cycle_type_samples(f, 20)
        assert len(samples) == 20

        primes = [s.p for s in samples]
        assert primes == sorted(primes)
        disc = int(discriminant(f))
        for s in samples:
            assert disc % s.p != 0
            assert sum(s.partition) == 5
            assert list(s.partition) == sorted(s.partition, reverse=True)

    def test_known_partitions(self):
        # x^2 + 1 splits exactly at the primes 1 mod 4
        for s in cycle_type_samples(poly(1, 0, 1), 10):
            assert s.partition == ((1, 1) if s.p % 4 == 1 else (2,))

    def test_skips_leading_coefficient(self):
        samples = cycle_type_samples(poly(3, 0, -2), 5)
        assert all(s.p not in (2, 3) for s in samples)

    def test_repeated_root(self):
        with pytest.raises(ValueError, match="repeated root"):
            next(iter_cycle_types(poly(1, -2, 1)))

    def test_constant(self):
        with pytest.raises(ValueError, match="nonconstant"):
            next(iter_cycle_types(poly(4)))
