"""
Number fields QQ[x]/<f> and two-generator extensions QQ(a, b).

A :class:`NumberField` is a :class:`galoiskit.modp.QuotientField` over the
rationals; its elements are stored on the basis 1, a, ..., a^(d-1).

A :class:`TensorBasisField` adjoins a second generator b with minimal
polynomial g over QQ on top of QQ(a). Elements are polynomials in b with
coefficients in QQ(a), i.e. coordinates on the basis a^i b^j, and the
relations f(a) = 0 and g(b) = 0 are applied as rewrite steps during
multiplication. The construction is only accepted when the degree really
multiplies, which is checked by finding a primitive element a + cb whose
minimal polynomial has degree deg f * deg g.
"""

from __future__ import annotations

__all__ = [
    "NFElement",
    "NumberField",
    "TensorBasisField",
    "kronecker_extend",
    "min_poly_of_element",
    "primitive_element",
    "tower_degree",
]

import functools
import logging
import math
import typing
from fractions import Fraction

from galoiskit.domains import QQ, Domain
from galoiskit.exact import QMatrix, kernel
from galoiskit.modp import QFElement, QuotientField, factor_over_fp
from galoiskit.poly import Polynomial, primitive_part
from galoiskit.settings import settings
from galoiskit.utils import primes_up_to

if typing.TYPE_CHECKING:
    from collections.abc import Iterable

    from galoiskit.types import Verdict

logger = logging.getLogger(__name__)

type NFElement = QFElement

MAX_AMBIENT_DEGREE = 24
PRIMITIVE_ELEMENT_SEARCH_CAP = 100


class NumberField(QuotientField):
    """
    The number field QQ[x]/<f> for a monic irreducible `f` over QQ.

    Irreducibility is checked with :func:`galoiskit.irr.is_irreducible_q`
    unless ``check=False``.
    """

    def __init__(self, modulus: Polynomial, variable: str = "a", *, check: bool = True):
        if modulus.domain != QQ:
            modulus = modulus.with_domain(QQ)
        super().__init__(modulus, variable, check=check)

    def __repr__(self) -> str:
        return f"NumberField({self.modulus.format()!r})"


class TensorBasisField:
    """
    QQ(a, b) with a a root of `f` and b a root of `g`, on the basis a^i b^j.

    Raises
    ------
    ValueError
        When `g` is not certified irreducible over QQ, or when `g` does not
        certifiably stay irreducible over QQ(a); see :func:`primitive_element`.
    """

    def __init__(
        self,
        f: Polynomial,
        g: Polynomial,
        variables: tuple[str, str] = ("a", "b"),
    ):
        from galoiskit.irr import Verdict

        var_a, var_b = variables
        self.inner = NumberField(f, var_a)
        g = g.with_domain(QQ).monic()
        match _certified_verdict(g):
            case Verdict.reducible:
                raise ValueError(f"{g} is reducible over QQ")
            case Verdict.unknown:
                raise ValueError(f"Cannot certify irreducibility of {g} over QQ")

        self.field = _TensorQuotient(
            g.map_coefficients(self.inner.convert, self.inner), var_b, basis=self
        )
        self.f = self.inner.modulus
        self.g = g
        self.degree = self.inner.degree * self.field.degree

        # the degree multiplies iff some a + cb generates a field of full degree
        self.primitive = primitive_element(self)

    def __repr__(self) -> str:
        return f"TensorBasisField({self.f.format()!r}, {self.g.format()!r})"

    @property
    def alpha(self) -> QFElement:
        return self.field.convert(self.inner.gen)

    @property
    def beta(self) -> QFElement:
        return self.field.gen

    def element(self, coords: dict[tuple[int, int], Fraction | int]) -> QFElement:
        """Element from its coordinates keyed by (i, j) for a^i b^j."""
        m = self.inner.degree
        columns = [[Fraction(0)] * m for _ in range(self.field.degree)]
        for (i, j), value in coords.items():
            columns[j][i] = Fraction(value)
        return self.field.element([self.inner.element(col) for col in columns])

    def coordinates(self, e: QFElement) -> tuple[Fraction, ...]:
        """Coordinates on a^i b^j with i varying fastest: 1, a, a^2, b, ab, ..."""
        return tuple(c for inner in e.coordinates for c in inner.coordinates)


def _coordinates(e: QFElement, ambient: NumberField | TensorBasisField) -> tuple[Fraction, ...]:
    if isinstance(ambient, TensorBasisField):
        return ambient.coordinates(e)
    return tuple(Fraction(c) for c in e.coordinates)


def _ambient_of(e: QFElement) -> NumberField | TensorBasisField:
    owner = e.owner
    if isinstance(owner, NumberField):
        return owner
    if isinstance(owner, _TensorQuotient):
        return owner.basis
    raise ValueError(f"{e} is not an element of a number field")


class _TensorQuotient(QuotientField):
    """QQ(a)[b]/<g> with a back-reference to its :class:`TensorBasisField`."""

    def __init__(self, modulus: Polynomial, variable: str, *, basis: TensorBasisField):
        super().__init__(modulus, variable, check=False)
        self.basis = basis


def min_poly_of_element(
    e: QFElement, ambient: NumberField | TensorBasisField | None = None
) -> Polynomial:
    """
    Minimal polynomial over QQ of an element of a number field.

    Writes 1, e, e^2, ... in coordinates and stops at the first k where the
    columns become dependent; the kernel vector, which has a 1 in column k,
    gives the monic minimal polynomial.
    """
    from galoiskit.irr import Verdict, is_irreducible_q

    if ambient is None:
        ambient = _ambient_of(e)

    mp = _annihilator(e, ambient)
    logger.debug("Minimal polynomial of %s is %s", e, mp)
    if is_irreducible_q(mp).verdict == Verdict.reducible:
        raise AssertionError(f"Minimal polynomial {mp} is reducible")
    return mp


def _annihilator(e: QFElement, ambient: NumberField | TensorBasisField) -> Polynomial:
    n = ambient.degree
    if n > MAX_AMBIENT_DEGREE:
        raise ValueError(f"Ambient degree {n} exceeds {MAX_AMBIENT_DEGREE}")

    one = e.owner.one
    columns = [_coordinates(one, ambient)]
    power = one
    for _ in range(n):
        power = power * e
        columns.append(_coordinates(power, ambient))
        if basis := kernel(QMatrix.from_columns(columns)):
            return Polynomial(basis[0], QQ)
    raise AssertionError(f"No linear dependency among the first {n + 1} powers of {e}")


def _certified_verdict(f: Polynomial) -> Verdict:
    """
    Irreducibility over QQ with the degree pattern test as a fallback for
    polynomials the certificate chain leaves Unknown.
    """
    from galoiskit.irr import Verdict, is_irreducible_q, possible_factor_degrees

    verdict = is_irreducible_q(f).verdict
    if verdict != Verdict.unknown:
        return verdict

    primes = primes_up_to(settings.reduction_prime_bound)
    if len(possible_factor_degrees(primitive_part(f), primes)) == 2:
        return Verdict.irreducible
    return Verdict.unknown


def primitive_element(F: TensorBasisField) -> tuple[int, QFElement, Polynomial]:
    """
    Smallest c >= 0 such that a + cb has degree [QQ(a, b) : QQ].

    The first a + cb whose annihilator has degree deg f * deg g generates
    the algebra QQ(a)[y]/<g>, which is a field exactly when that annihilator
    is irreducible. Its verdict therefore decides the construction.

    Returns ``(c, theta, minimal polynomial of theta)``.

    Raises
    ------
    ValueError
        When the annihilator is reducible, i.e. `g` splits over QQ(a); when
        its irreducibility cannot be certified; or when no c <= 100 reaches
        the full degree.
    """
    from galoiskit.irr import Verdict

    alpha, beta = F.alpha, F.beta
    for c in range(PRIMITIVE_ELEMENT_SEARCH_CAP + 1):
        theta = alpha + beta * c
        mp = _annihilator(theta, F)
        if len(mp.coeffs) - 1 < F.degree:
            continue

        match _certified_verdict(mp):
            case Verdict.irreducible:
                logger.debug("Primitive element found with c=%d: %s", c, mp)
                return c, theta, mp
            case Verdict.reducible:
                raise ValueError(f"{F.g} does not stay irreducible over QQ[x]/<{F.f}>")
            case _:
                raise ValueError(
                    f"Cannot certify that {F.g} stays irreducible over QQ[x]/<{F.f}>"
                )

    raise ValueError(
        f"No primitive element a + cb with c <= {PRIMITIVE_ELEMENT_SEARCH_CAP} "
        f"for {F.g} over QQ[x]/<{F.f}>"
    )


def kronecker_extend(base: Domain, f: Polynomial) -> tuple[QuotientField, QFElement]:
    """
    An extension of `base` containing a root of `f`.

    Picks the lowest degree irreducible factor g of `f`, builds base[x]/<g>
    and returns it with the root x + <g>, after checking f(root) = 0.
    """
    f = f.with_domain(base)
    if f.is_constant():
        raise ValueError("Kronecker's construction needs a nonconstant polynomial")

    if base == QQ:
        from galoiskit.irr import factor_q

        _, factors = factor_q(f)
        g, _ = factors[0]
        field: QuotientField = NumberField(g.monic(), check=False)
    else:
        factors = factor_over_fp(f)
        g, _ = min(factors, key=lambda item: len(item[0].coeffs))
        field = QuotientField(g, check=False)

    root = field.gen
    if not field.is_zero(f(root)):
        raise AssertionError(f"{root} is not a root of {f}")
    return field, root


def tower_degree(degrees: Iterable[int]) -> int:
    """[L:F] = [L:E][E:F], for a chain given by its step degrees."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("Every step of a tower has degree at least 1")
    return math.prod(degrees)


@functools.lru_cache(16)
def cube_root_of_two_and_omega() -> TensorBasisField:
    """QQ(2^(1/3), w) with w^2 + w + 1 = 0, the running example of degree 6."""
    return TensorBasisField(Polynomial([-2, 0, 0, 1]), Polynomial([1, 1, 1]))
