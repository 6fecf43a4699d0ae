from galoiskit.irr import quadratic_factor
from galoiskit.irr.factor_search import cauchy_bound
from tests.utils import poly


class TestCauchyBound:
    def test(self):
        assert cauchy_bound([2, 0, 1]) == 3
        assert cauchy_bound([-6, 1, 2]) == 4
        assert cauchy_bound([5]) == 1


class TestQuadraticFactor:
    def test_square(self):
        assert quadratic_factor(poly(1, 0, 2, 0, 1)) == poly(1, 0, 1)

    def test_non_monic(self):
        f = poly(2, 0, 1) * poly(3, 1, 0, 1)
        assert quadratic_factor(f) == poly(2, 0, 1)

    def test_quintic(self):
        f = poly(1, 0, 3) * poly(1, 0, 0, -2)
        assert quadratic_factor(f) == poly(1, 0, 3)

    def test_large_coefficients(self):
        f = poly(1, 0, -2 * 199**2) * poly(1, 0, -2 * 201**2)
        g = quadratic_factor(f)
        assert g is not None
        assert (f % g).is_zero()

    def test_irreducible(self):
        assert quadratic_factor(poly(1, 0, -10, 0, 1)) is None
        assert quadratic_factor(poly(1, 0, 0, 0, -4, 2)) is None

    def test_low_degree(self):
        assert quadratic_factor(poly(1, 0, -1)) is None
