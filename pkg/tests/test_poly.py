from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from galoiskit.domains import QQ, ModularRing, NotInvertibleError, PrimeField
from galoiskit.poly import (
    MINUS_INFINITY,
    Polynomial,
    content,
    cyclotomic,
    cyclotomic_p,
    derivative,
    discriminant,
    divmod_poly,
    evaluate,
    gcd,
    gcd_bezout,
    map_coefficients,
    primitive_part,
    resultant,
    shift,
    squarefree,
)
from tests.utils import poly, polynomials

F2 = PrimeField(2)
F5 = PrimeField(5)
F7 = PrimeField(7)
F13 = PrimeField(13)
Z6 = ModularRing(6)


class TestPolynomial:
    def test_canonical_form(self):
        f = Polynomial([1, 2, 0, 0])
        assert f.coeffs == (1, 2)
        assert f.degree == 1

    def test_zero_degree(self):
        zero = Polynomial.zero()
        assert zero.degree is MINUS_INFINITY
        assert MINUS_INFINITY < 0
        assert MINUS_INFINITY + 3 is MINUS_INFINITY

    def test_format(self):
        assert poly(1, 0, 0, 0, -4, 2).format() == "x^5 - 4x + 2"
        assert poly(-1, 0, 1).format() == "-x^2 + 1"
        assert poly(Fraction(1, 2), -3).format("t") == "1/2t - 3"
        assert Polynomial.zero().format() == "0"

    def test_immutable(self):
        f = poly(1, 1)
        with pytest.raises(AttributeError):
            f.coeffs = ()  # type: ignore[misc]

    def test_mixed_domains(self):
        with pytest.raises(ValueError, match="different domains"):
            poly(1, 1) + poly(1, 1, domain=F5)

    def test_from_roots(self):
        assert Polynomial.from_roots([1, 2]) == poly(1, -3, 2)

    def test_pow(self):
        assert poly(1, 0, 1) ** 2 == poly(1, 0, 2, 0, 1)
        with pytest.raises(ValueError, match="Negative powers"):
            poly(1, 0) ** -1


class TestArithmetic:
    def test_non_domain(self):
        f = poly(3, 1, domain=Z6) * poly(2, 1, domain=Z6)
        assert f == poly(5, 1, domain=Z6)
        assert f.degree == 1

    def test_add_zero(self):
        f = poly(1, -4, 2)
        assert f + Polynomial.zero() == f

    def test_frobenius_square(self):
        assert poly(1, 1, domain=F2) ** 2 == poly(1, 0, 1, domain=F2)

    @hypothesis_settings(max_examples=200)
    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms_qq(self, f: Polynomial, g: Polynomial, h: Polynomial):
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f
        assert f - f == Polynomial.zero()
        assert f * Polynomial.one() == f

    @hypothesis_settings(max_examples=200)
    @given(polynomials(F7), polynomials(F7), polynomials(F7))
    def test_ring_axioms_fp(self, f: Polynomial, g: Polynomial, h: Polynomial):
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @hypothesis_settings(max_examples=200)
    @given(
        st.sampled_from([QQ, F7]).flatmap(
            lambda dom: st.tuples(
                polynomials(dom, nonzero=True), polynomials(dom, nonzero=True)
            )
        )
    )
    def test_degree_is_additive(self, pair: tuple[Polynomial, Polynomial]):
        f, g = pair
        assert (f * g).degree == f.degree + g.degree


class TestDivmod:
    def test_worked_example(self):
        q, r = divmod_poly(poly(1, 0, -2, 15), poly(1, 0, -2))
        assert q == poly(1, 0)
        assert r == poly(15)

    def test_remainder(self):
        q, r = divmod(poly(1, 0, 1, 1, 1), poly(1, 0, 1))
        assert q == poly(1, 0, 0)
        assert r == poly(1, 1)

    def test_self(self):
        f = poly(2, 0, -3, 1)
        assert divmod(f, f) == (Polynomial.one(), Polynomial.zero())

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(poly(1, 0), Polynomial.zero())

    def test_not_invertible(self):
        with pytest.raises(NotInvertibleError, match="not invertible"):
            divmod(poly(1, 0, 0, domain=Z6), poly(2, 1, domain=Z6))

    def test_monic_divisor_over_ring(self):
        q, r = divmod(poly(1, 0, 0, domain=Z6), poly(1, 1, domain=Z6))
        assert q * poly(1, 1, domain=Z6) + r == poly(1, 0, 0, domain=Z6)

    @hypothesis_settings(max_examples=200)
    @given(
        st.sampled_from([QQ, F5, F13]).flatmap(
            lambda dom: st.tuples(polynomials(dom), polynomials(dom, nonzero=True))
        )
    )
    def test_round_trip(self, pair: tuple[Polynomial, Polynomial]):
        f, g = pair
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


class TestGcd:
    def test_worked_example(self):
        f, g = poly(1, 0, -1), poly(2, -2, -4, 0)
        d, a0, b0 = gcd_bezout(f, g)
        assert d == poly(1, 1)
        assert a0 * f + b0 * g == d
        assert gcd(f, g) == poly(1, 1)

    def test_with_zero(self):
        d, _, _ = gcd_bezout(poly(2, 4), Polynomial.zero())
        assert d == poly(1, 2)

    def test_cyclotomic(self):
        x5_minus_1 = poly(1, 0, 0, 0, 0, -1)
        assert gcd(cyclotomic_p(5), x5_minus_1) == cyclotomic_p(5)

    def test_both_zero(self):
        with pytest.raises(ValueError, match="undefined"):
            gcd_bezout(Polynomial.zero(), Polynomial.zero())
        with pytest.raises(ValueError, match="undefined"):
            gcd(Polynomial.zero(), Polynomial.zero())

    def test_over_fp(self):
        f = poly(1, 0, 1, domain=F2) * poly(1, 1, 1, domain=F2)
        assert gcd(f, poly(1, 1, 1, domain=F2)) == poly(1, 1, 1, domain=F2)

    @hypothesis_settings(max_examples=200)
    @given(
        st.sampled_from([QQ, F7]).flatmap(
            lambda dom: st.tuples(polynomials(dom, nonzero=True), polynomials(dom))
        )
    )
    def test_bezout_identity(self, pair: tuple[Polynomial, Polynomial]):
        f, g = pair
        d, a0, b0 = gcd_bezout(f, g)
        assert d.is_monic()
        assert a0 * f + b0 * g == d
        assert (f % d).is_zero()
        assert (g % d).is_zero()

    @hypothesis_settings(max_examples=200)
    @given(polynomials(nonzero=True), polynomials())
    def test_primitive_euclid_agrees(self, f: Polynomial, g: Polynomial):
        d, _, _ = gcd_bezout(f, g)
        assert gcd(f, g) == d


class TestDerivative:
    def test(self):
        assert derivative(poly(1, 2, 1)) == poly(2, 2)
        assert derivative(poly(7)) == Polynomial.zero()

    def test_xq_minus_x(self):
        F3 = PrimeField(3)
        f = Polynomial.monomial(1, 9, F3) - Polynomial.x(F3)
        assert derivative(f) == Polynomial.constant(-1, F3)

    @hypothesis_settings(max_examples=200)
    @given(polynomials(), polynomials())
    def test_product_rule(self, f: Polynomial, g: Polynomial):
        assert derivative(f * g) == derivative(f) * g + f * derivative(g)


class TestSquarefree:
    def test(self):
        assert not squarefree(poly(1, 2, 1))
        assert squarefree(poly(1, 0))

    def test_xq_minus_x(self):
        f = Polynomial.monomial(1, 8, F2) - Polynomial.x(F2)
        assert squarefree(f)

    def test_zero(self):
        with pytest.raises(ValueError, match="not squarefree"):
            squarefree(Polynomial.zero())


class TestEvaluate:
    def test(self):
        f = poly(1, 0, 0, 1, 1, domain=F2)
        assert evaluate(f, 0) == 1
        assert evaluate(f, 1) == 1
        assert poly(1, 0, -3, 6)(1) == 4

    def test_constant_term(self):
        assert poly(3, 2, 9)(0) == 9

    @hypothesis_settings(max_examples=200)
    @given(polynomials(F13), polynomials(F13), st.integers(min_value=0, max_value=12))
    def test_homomorphism(self, f: Polynomial, g: Polynomial, c: int):
        assert evaluate(f * g, c) == F13.mul(evaluate(f, c), evaluate(g, c))

    @hypothesis_settings(max_examples=200)
    @given(polynomials(F7, nonzero=True))
    def test_root_count_bound(self, f: Polynomial):
        roots = [c for c in F7.elements() if f(c) == 0]
        assert len(roots) <= len(f.coeffs) - 1

    @hypothesis_settings(max_examples=200)
    @given(polynomials(F7), st.integers(min_value=0, max_value=6))
    def test_factor_theorem(self, f: Polynomial, c: int):
        _, r = divmod(f, poly(1, -c, domain=F7))
        assert (f(c) == 0) == r.is_zero()


class TestMapCoefficients:
    def test_reduction(self):
        f = poly(8, 0, -6, -1)
        assert map_coefficients(f, F5.convert, F5) == poly(3, 0, 4, 4, domain=F5)

    def test_degree_drop(self):
        assert map_coefficients(poly(5, 1, 0), F5.convert, F5) == poly(1, 0, domain=F5)

    def test_identity(self):
        f = poly(1, Fraction(1, 2), 3)
        assert f.map_coefficients(lambda c: c, QQ) == f

    @hypothesis_settings(max_examples=200)
    @given(polynomials(), polynomials())
    def test_homomorphism(self, f: Polynomial, g: Polynomial):
        # denominators stay below 13, so reduction mod 13 is defined
        sigma = F13.convert
        assert map_coefficients(f * g, sigma, F13) == (
            map_coefficients(f, sigma, F13) * map_coefficients(g, sigma, F13)
        )


class TestDiscriminant:
    def test_cubic(self):
        assert discriminant(poly(1, 0, -3, 1)) == 81
        assert discriminant(poly(1, 0, 0, -2)) == -108

    def test_distinct_roots(self):
        assert discriminant(Polynomial.from_roots([0, 1])) == 1

    def test_quintic(self):
        assert discriminant(poly(1, 0, 0, 0, -4, 2)) == -212144

    def test_repeated_root(self):
        assert discriminant(poly(1, 2, 1)) == 0

    def test_constant(self):
        with pytest.raises(ValueError, match="constant"):
            discriminant(poly(3))

    def test_product_of_root_differences(self):
        roots = [Fraction(-2), Fraction(1, 2), Fraction(3)]
        expected = Fraction(1)
        for i, a in enumerate(roots):
            for b in roots[i + 1 :]:
                expected *= (a - b) ** 2
        assert discriminant(Polynomial.from_roots(roots)) == expected

    def test_resultant(self):
        # res(x - a, g) = g(a)
        g = poly(1, 0, -3, 6)
        assert resultant(poly(1, -2), g) == g(2)
        assert resultant(poly(1, 0, -1), poly(1, -1)) == 0


class TestCyclotomic:
    def test_p(self):
        assert cyclotomic_p(5) == poly(1, 1, 1, 1, 1)
        assert cyclotomic_p(2) == poly(1, 1)

    def test_x_p_minus_1(self):
        assert poly(1, -1) * cyclotomic_p(7) == Polynomial.monomial(1, 7) - 1

    def test_not_prime(self):
        with pytest.raises(ValueError, match="not a prime"):
            cyclotomic_p(6)

    def test_general(self):
        assert cyclotomic(12) == poly(1, 0, -1, 0, 1)
        assert cyclotomic(7) == cyclotomic_p(7)
        assert cyclotomic(1) == poly(1, -1)


class TestShift:
    def test(self):
        assert shift(poly(1, 0, 0), 1) == poly(1, 2, 1)
        f = poly(3, -1, 4)
        assert shift(f, 0) == f

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_cyclotomic(self, p: int):
        g = shift(cyclotomic_p(p), 1)
        assert g.lc == 1
        assert g[0] == p
        assert all(c % p == 0 for c in g.coeffs[:-1])


class TestContent:
    def test(self):
        f = poly(Fraction(1, 2), 1)
        assert content(f) == Fraction(1, 2)
        assert primitive_part(f) == poly(1, 2)

    def test_negative_leading_coefficient(self):
        f = poly(-2, 4)
        assert content(f) == -2
        assert primitive_part(f) == poly(1, -2)
