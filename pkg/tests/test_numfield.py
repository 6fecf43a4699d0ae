import pytest

from galoiskit.domains import QQ, PrimeField
from galoiskit.numfield import (
    NumberField,
    TensorBasisField,
    cube_root_of_two_and_omega,
    kronecker_extend,
    min_poly_of_element,
    tower_degree,
)
from tests.utils import poly


@pytest.fixture(scope="module")
def sqrt2() -> NumberField:
    return NumberField(poly(1, 0, -2))


@pytest.fixture(scope="module")
def sqrt2_sqrt3() -> TensorBasisField:
    return TensorBasisField(poly(1, 0, -2), poly(1, 0, -3))


class TestNumberField:
    def test_arithmetic(self, sqrt2: NumberField):
        a = sqrt2.gen
        assert a**2 == 2
        assert (1 + a).inverse() == a - 1
        assert 1 / a == a / 2

    def test_coordinates(self, sqrt2: NumberField):
        e = (1 + sqrt2.gen) ** 3
        assert e.coordinates == (7, 5)

    def test_reducible_modulus(self):
        with pytest.raises(ValueError, match="reducible"):
            NumberField(poly(1, 0, -1))

    def test_made_monic(self):
        assert NumberField(poly(2, 0, -4)).modulus == poly(1, 0, -2)


class TestMinPolyOfElement:
    def test_quadratic(self, sqrt2: NumberField):
        assert min_poly_of_element(1 + sqrt2.gen) == poly(1, -2, -1)

    def test_rational(self, sqrt2: NumberField):
        assert min_poly_of_element(sqrt2.convert(3)) == poly(1, -3)

    def test_generators(self):
        field = cube_root_of_two_and_omega()
        assert min_poly_of_element(field.alpha) == poly(1, 0, 0, -2)
        assert min_poly_of_element(field.beta) == poly(1, 1, 1)

    def test_cube_root_of_two_plus_omega(self):
        field = cube_root_of_two_and_omega()
        mp = min_poly_of_element(field.alpha + field.beta, field)
        assert mp == poly(1, 3, 6, 3, 0, 9, 9)

    def test_sqrt2_plus_sqrt3(self, sqrt2_sqrt3: TensorBasisField):
        mp = min_poly_of_element(sqrt2_sqrt3.alpha + sqrt2_sqrt3.beta)
        assert mp == poly(1, 0, -10, 0, 1)

    def test_is_annihilating(self, sqrt2_sqrt3: TensorBasisField):
        theta = sqrt2_sqrt3.alpha * sqrt2_sqrt3.beta + 1
        mp = min_poly_of_element(theta)
        assert sqrt2_sqrt3.field.is_zero(mp(theta))


class TestTensorBasisField:
    def test_degree(self, sqrt2_sqrt3: TensorBasisField):
        assert sqrt2_sqrt3.degree == 4
        assert cube_root_of_two_and_omega().degree == 6

    def test_primitive_element(self, sqrt2_sqrt3: TensorBasisField):
        c, theta, mp = sqrt2_sqrt3.primitive
        assert c == 1
        assert theta == sqrt2_sqrt3.alpha + sqrt2_sqrt3.beta
        assert mp == poly(1, 0, -10, 0, 1)

    def test_primitive_element_of_degree_six(self):
        c, _, mp = cube_root_of_two_and_omega().primitive
        assert c == 1
        assert mp == poly(1, 3, 6, 3, 0, 9, 9)

    def test_element(self, sqrt2_sqrt3: TensorBasisField):
        ab = sqrt2_sqrt3.element({(1, 1): 1})
        assert ab == sqrt2_sqrt3.alpha * sqrt2_sqrt3.beta
        assert sqrt2_sqrt3.coordinates(ab) == (0, 0, 0, 1)

    def test_relations(self, sqrt2_sqrt3: TensorBasisField):
        assert sqrt2_sqrt3.alpha**2 == 2
        assert sqrt2_sqrt3.beta**2 == 3

    def test_degree_does_not_multiply(self):
        # sqrt(8) already lies in QQ(sqrt 2)
        with pytest.raises(ValueError, match="does not stay irreducible"):
            TensorBasisField(poly(1, 0, -2), poly(1, 0, -8))

    def test_reducible_adjoined_polynomial(self):
        with pytest.raises(ValueError, match="reducible over QQ"):
            TensorBasisField(poly(1, 0, 0, -2), poly(1, 0, -4))

    def test_same_cubic_twice(self):
        # x^3 - 2 has the root a in QQ(a); full-degree annihilators are
        # products like (x^3 - 54)(x^6 + 108)
        with pytest.raises(ValueError, match=r"stays? irreducible over QQ\[x\]"):
            TensorBasisField(poly(1, 0, 0, -2), poly(1, 0, 0, -2))

    def test_element_knows_its_field(self, sqrt2_sqrt3: TensorBasisField):
        assert sqrt2_sqrt3.field.basis is sqrt2_sqrt3


class TestKroneckerExtend:
    def test_rationals(self):
        f = poly(1, 0, 0, -2)
        field, root = kronecker_extend(QQ, f)
        assert field.degree == 3
        assert root**3 == 2

    def test_lowest_degree_factor(self):
        field, root = kronecker_extend(QQ, poly(1, -3) * poly(1, 0, 1))
        assert field.degree == 1
        assert root == 3

    def test_finite_field(self):
        f2 = PrimeField(2)
        f = poly(1, 1, 1, domain=f2)
        field, root = kronecker_extend(f2, f)
        assert field.order == 4
        assert field.is_zero(f(root))

    def test_constant(self):
        with pytest.raises(ValueError, match="nonconstant"):
            kronecker_extend(QQ, poly(5))


class TestTowerDegree:
    def test(self):
        assert tower_degree([2, 3]) == 6
        assert tower_degree([2, 2, 2]) == 8
        assert tower_degree([3, 2]) == tower_degree([2, 3])

    def test_invalid(self):
        with pytest.raises(ValueError, match="at least 1"):
            tower_degree([2, 0])
