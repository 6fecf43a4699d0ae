"""
Finite fields and quotient fields F[x]/<f>.

:class:`QuotientField` builds the field F[x]/<f> for a monic irreducible `f`
over a base field F. The base can itself be a quotient field, which is how
towers such as F_9[X]/<g> (729 elements) are built without flattening.
:class:`galoiskit.numfield.NumberField` reuses it with the rationals as base.

The factorization and irreducibility routines over finite fields are brute
force and guarded by ``settings.search_bound``. :func:`degree_partition` is
the exception: it runs distinct-degree factorization on plain integer lists
and serves the Galois group sampler.
"""

from __future__ import annotations

__all__ = [
    "QFElement",
    "QuotientField",
    "SearchBoundExceeded",
    "characteristic",
    "degree_partition",
    "factor_over_fp",
    "find_irreducible",
    "is_irreducible_fp",
    "is_irreducible_over",
    "monic_polynomials",
    "multiplication_table",
    "multiplicative_generator",
    "verify_xq_minus_x",
]

import functools
import itertools
import logging
import math
import typing
from fractions import Fraction

from galoiskit.domains import QQ, Domain, ModularRing, PrimeField
from galoiskit.poly import Polynomial, derivative, gcd_bezout, squarefree
from galoiskit.settings import settings
from galoiskit.utils import factorize

if typing.TYPE_CHECKING:
    from collections.abc import Iterator
    from typing import Any

logger = logging.getLogger(__name__)


class SearchBoundExceeded(ValueError):
    """Raised when a brute-force search would exceed ``settings.search_bound``."""


class QFElement:
    """
    A coset g + <f> of a quotient field, stored by its reduced representative.

    Arithmetic accepts other elements of the same field and anything the
    field can convert (integers, rationals, elements of the base).
    """

    __slots__ = ("owner", "rep")

    owner: QuotientField
    rep: Polynomial

    def __init__(self, owner: QuotientField, rep: Polynomial):
        if rep.domain != owner.base:
            raise ValueError(f"Representative is not over {owner.base}")
        if len(rep.coeffs) > owner.degree:
            rep = rep % owner.modulus
        object.__setattr__(self, "owner", owner)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _other(self, other: Any) -> QFElement:
        if isinstance(other, QFElement):
            if other.owner != self.owner:
                raise ValueError(
                    f"Elements belong to different fields: {self.owner} and {other.owner}"
                )
            return other
        return self.owner.convert(other)

    def __add__(self, other: Any) -> QFElement:
        return QFElement(self.owner, self.rep + self._other(other).rep)

    __radd__ = __add__

    def __neg__(self) -> QFElement:
        return QFElement(self.owner, -self.rep)

    def __sub__(self, other: Any) -> QFElement:
        return QFElement(self.owner, self.rep - self._other(other).rep)

    def __rsub__(self, other: Any) -> QFElement:
        return self._other(other) - self

    def __mul__(self, other: Any) -> QFElement:
        return QFElement(self.owner, self.rep * self._other(other).rep)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> QFElement:
        return self * self._other(other).inverse()

    def __rtruediv__(self, other: Any) -> QFElement:
        return self._other(other) * self.inverse()

    def __pow__(self, k: int) -> QFElement:
        return self.owner.power(self, k)

    def inverse(self) -> QFElement:
        """Inverse through the Bezout identity a0*rep + b0*modulus = 1."""
        if self.rep.is_zero():
            raise ZeroDivisionError("division by zero")
        d, a0, _ = gcd_bezout(self.rep, self.owner.modulus)
        if d.degree != 0:
            # only possible when the modulus is reducible
            raise ZeroDivisionError(f"{self} is a zero divisor")
        return QFElement(self.owner, a0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QFElement):
            return self.owner == other.owner and self.rep == other.rep
        if isinstance(other, int | Fraction):
            return self == self.owner.convert(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rep)

    def __bool__(self) -> bool:
        return not self.rep.is_zero()

    def __repr__(self) -> str:
        return f"QFElement({self!s})"

    def __str__(self) -> str:
        return self.rep.format(self.owner.variable)

    @property
    def coordinates(self) -> tuple[Any, ...]:
        """Coefficients on the basis 1, a, ..., a^(d-1)."""
        coeffs = self.rep.coeffs
        return tuple(coeffs) + (self.owner.base.zero,) * (self.owner.degree - len(coeffs))


class QuotientField(Domain[QFElement]):
    """
    The field F[x]/<f> for a monic irreducible `f` over the base field F.

    Parameters
    ----------
    modulus : Polynomial
        Irreducible polynomial over the base field; made monic on construction.
    variable : str
        Name of the generator x + <f>, used when rendering elements.
    check : bool
        Verify irreducibility of the modulus. Skipping the check is only meant
        for callers that have already certified it.
    """

    is_field = True

    def __init__(self, modulus: Polynomial, variable: str = "a", *, check: bool = True):
        base = modulus.domain
        if not base.is_field:
            raise ValueError(f"Base {base} of a quotient field must be a field")
        if modulus.degree == 0 or modulus.is_zero():
            raise ValueError("The modulus must be a nonconstant polynomial")

        modulus = modulus.monic()
        if check and not is_irreducible_over(modulus):
            raise ValueError(
                f"Modulus {modulus} is reducible over {base}; the quotient is not a field"
            )

        self.base: Domain = base
        self.modulus = modulus
        self.variable = variable
        self.degree: int = len(modulus.coeffs) - 1

    def __repr__(self) -> str:
        return f"QuotientField({self.base!r}, {self.modulus.format()!r})"

    def __str__(self) -> str:
        return f"{self.base}[{self.variable}]/<{self.modulus.format(self.variable)}>"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuotientField)
            and self.base == other.base
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.base, self.modulus))

    # PART/ domain protocol

    @functools.cached_property
    def zero(self) -> QFElement:
        return QFElement(self, Polynomial.zero(self.base))

    @functools.cached_property
    def one(self) -> QFElement:
        return QFElement(self, Polynomial.one(self.base))

    @functools.cached_property
    def gen(self) -> QFElement:
        """The class of x, a root of the modulus."""
        return QFElement(self, Polynomial.x(self.base))

    def element(self, coeffs: Any) -> QFElement:
        """Element from its coordinates on 1, a, ..., a^(d-1)."""
        return QFElement(self, Polynomial(coeffs, self.base))

    def convert(self, value: Any) -> QFElement:
        if isinstance(value, QFElement):
            if value.owner == self:
                return value
            # an element of the base field
            if value.owner == self.base:
                return QFElement(self, Polynomial._raw([value], self.base))
            raise ValueError(f"Cannot convert {value} into {self}")
        if isinstance(value, Polynomial):
            return QFElement(self, value)
        return QFElement(self, Polynomial.constant(value, self.base))

    def add(self, a: QFElement, b: QFElement) -> QFElement:
        return a + b

    def neg(self, a: QFElement) -> QFElement:
        return -a

    def sub(self, a: QFElement, b: QFElement) -> QFElement:
        return a - b

    def mul(self, a: QFElement, b: QFElement) -> QFElement:
        return a * b

    def inv(self, a: QFElement) -> QFElement:
        return a.inverse()

    def is_zero(self, a: QFElement) -> bool:
        return a.rep.is_zero()

    def format(self, a: QFElement) -> str:
        return str(a)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def order(self) -> int | None:
        base_order = self.base.order
        return None if base_order is None else base_order**self.degree

    def elements(self) -> Iterator[QFElement]:
        """
        Enumerate a finite field in a fixed order.

        The coordinate of 1 varies fastest, so F_4 = F_2[a]/<a^2+a+1> comes out
        as 0, 1, a, a + 1.
        """
        base_elements = list(self.base.elements())
        for coords in itertools.product(base_elements, repeat=self.degree):
            yield QFElement(self, Polynomial._raw(list(reversed(coords)), self.base))

    def prime_field(self) -> Domain:
        """The bottom of the tower."""
        base = self.base
        while isinstance(base, QuotientField):
            base = base.base
        return base


def _require_finite(domain: Domain, limit: int | None = None) -> int:
    order = domain.order
    if order is None:
        raise ValueError(f"{domain} is not finite")
    if limit is not None and order > limit:
        raise SearchBoundExceeded(f"Order {order} of {domain} exceeds the limit {limit}")
    return order


def characteristic(field: Domain) -> int:
    """The least k such that 1 added to itself k times is 0."""
    total, one = field.one, field.one
    for k in itertools.count(1):
        if field.is_zero(total):
            return k
        if k > settings.search_bound:
            raise SearchBoundExceeded("No finite characteristic found within the bound")
        total = field.add(total, one)
    raise AssertionError("unreachable")


def multiplication_table(domain: Domain) -> list[list[Any]]:
    """
    The full q x q multiplication table, rows and columns in
    :meth:`Domain.elements` order.

    Works for ring mode (``ModularRing(4)``) as well, where some nonzero rows
    never reach 1.
    """
    _require_finite(domain, settings.table_order_limit)
    elements = list(domain.elements())
    return [[domain.mul(a, b) for b in elements] for a in elements]


def monic_polynomials(base: Domain, degree: int) -> Iterator[Polynomial]:
    """
    All monic polynomials of the given degree over a finite base.

    Ordered by the coefficient vector read as a base-q number with the
    coefficient of x^(d-1) most significant, so ``x`` precedes ``x + 1``.
    """
    elements = list(base.elements())
    for coords in itertools.product(elements, repeat=degree):
        yield Polynomial._raw([*reversed(coords), base.one], base)


def _roots_free(f: Polynomial) -> bool:
    return not any(f.domain.is_zero(f(c)) for c in f.domain.elements())


@functools.lru_cache(256)
def _irreducibles_by_brute_force(base: Domain, degree: int) -> tuple[Polynomial, ...]:
    """Monic irreducibles of a given degree, by sieving with lower degrees."""
    q = _require_finite(base)
    if q**degree > settings.search_bound:
        raise SearchBoundExceeded(
            f"Enumerating {q}^{degree} polynomials exceeds the search bound"
        )

    smaller = [
        g for k in range(1, degree // 2 + 1) for g in _irreducibles_by_brute_force(base, k)
    ]
    found = []
    for f in monic_polynomials(base, degree):
        if degree <= 3:
            if degree == 1 or _roots_free(f):
                found.append(f)
        elif all(not (f % g).is_zero() for g in smaller):
            found.append(f)
    return tuple(found)


def is_irreducible_over(f: Polynomial) -> bool:
    """
    Irreducibility over the coefficient field of `f`.

    Prime fields use :func:`is_irreducible_fp`; finite quotient fields use
    root search up to degree 3 and trial division by all monic irreducibles
    of degree <= deg/2 above that; the rationals defer to
    :func:`galoiskit.irr.is_irreducible_q`.
    """
    base = f.domain
    n = len(f.coeffs) - 1
    if n < 1:
        return False
    if n == 1:
        return True

    if isinstance(base, PrimeField):
        return is_irreducible_fp(f)

    if base == QQ:
        from galoiskit.irr import Verdict, is_irreducible_q

        cert = is_irreducible_q(f)
        if cert.verdict == Verdict.unknown:
            raise ValueError(f"Cannot certify irreducibility of {f} over QQ")
        return cert.verdict == Verdict.irreducible

    _require_finite(base)
    f = f.monic()
    if n <= 3:
        return _roots_free(f)
    for k in range(1, n // 2 + 1):
        for g in _irreducibles_by_brute_force(base, k):
            if (f % g).is_zero():
                return False
    return True


def factor_over_fp(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """
    Factor `f` over a finite field into monic irreducibles with multiplicity.

    Trial division by every monic irreducible of degree 1, 2, ... while the
    square of the degree stays within the cofactor; whatever is left is
    irreducible. The leading coefficient is not part of the output.

    Raises
    ------
    SearchBoundExceeded
        When q^ceil(deg f / 2) exceeds ``settings.search_bound``.
    """
    if f.is_zero():
        raise ValueError("Cannot factor the zero polynomial")
    base = f.domain
    q = _require_finite(base)
    n = len(f.coeffs) - 1
    if q ** math.ceil(n / 2) > settings.search_bound:
        raise SearchBoundExceeded(
            f"Factoring a degree {n} polynomial over a field of order {q} "
            "exceeds the search bound"
        )

    remaining = f.monic()
    factors: list[tuple[Polynomial, int]] = []
    k = 1
    while 2 * k <= len(remaining.coeffs) - 1:
        for g in _irreducibles_by_brute_force(base, k):
            multiplicity = 0
            while True:
                quotient, r = divmod(remaining, g)
                if not r.is_zero():
                    break
                remaining = quotient
                multiplicity += 1
            if multiplicity:
                factors.append((g, multiplicity))
        k += 1

    # no factor of degree < k is left and 2k > deg, so the cofactor is irreducible
    if len(remaining.coeffs) > 1:
        factors.append((remaining, 1))

    logger.debug("Factored %s over %s into %d factor(s)", f, base, len(factors))
    return factors


def find_irreducible(base: Domain, degree: int) -> Polynomial:
    """The first monic irreducible of the given degree in enumeration order."""
    if degree < 1:
        raise ValueError("Degree must be positive")
    q = _require_finite(base)
    if q**degree > settings.search_bound:
        raise SearchBoundExceeded(
            f"Searching {q}^{degree} polynomials exceeds the search bound"
        )
    for f in monic_polynomials(base, degree):
        if is_irreducible_over(f):
            return f
    raise AssertionError(f"No irreducible polynomial of degree {degree} over {base}")


def multiplicative_generator(field: Domain) -> Any:
    """
    A generator of the cyclic group of nonzero elements.

    Elements are tried in enumeration order; g generates iff
    g^((q-1)/r) != 1 for every prime r dividing q - 1.
    """
    q = _require_finite(field, 10**6)
    if not field.is_field:
        raise ValueError(f"{field} is not a field")

    exponents = [(q - 1) // r for r in factorize(q - 1)]
    for g in field.elements():
        if field.is_zero(g):
            continue
        if all(not field.is_one(field.power(g, e)) for e in exponents):
            logger.debug("Found generator %s of the multiplicative group of %s", g, field)
            return g
    raise AssertionError(f"No multiplicative generator found in {field}")


def verify_xq_minus_x(field: Domain) -> bool:
    """
    Check that every element of a field of order q is a root of x^q - x and
    that x^q - x has no repeated roots over the prime field.
    """
    q = _require_finite(field, settings.table_order_limit)
    if not all(field.eq(field.power(a, q), a) for a in field.elements()):
        return False

    p = field.characteristic
    prime = PrimeField(p)
    f = Polynomial.monomial(1, q, prime) - Polynomial.x(prime)
    return squarefree(f) and derivative(f) == Polynomial.constant(-1, prime)


# PART/ fast arithmetic on integer coefficient lists modulo p
#
# Lists are little endian and kept without trailing zeros.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    for k in range(len(a) - 1 - dm, -1, -1):
        c = a[k + dm] * inv % p
        if c:
            for j, mj in enumerate(m):
                a[k + j] = (a[k + j] - c * mj) % p
    return _trim(a[:dm])


def _divexact(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    q = [0] * (len(a) - dm)
    for k in range(len(a) - 1 - dm, -1, -1):
        c = a[k + dm] * inv % p
        q[k] = c
        if c:
            for j, mj in enumerate(m):
                a[k + j] = (a[k + j] - c * mj) % p
    return _trim(q)


def _mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _rem([c % p for c in out], m, p)


def _powmod(a: list[int], k: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _rem(a, m, p)
    while k:
        if k & 1:
            result = _mulmod(result, base, m, p)
        base = _mulmod(base, base, m, p)
        k >>= 1
    return _rem(result, m, p)


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _rem(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _as_int_list(f: Polynomial) -> tuple[list[int], int]:
    if not isinstance(f.domain, ModularRing) or not f.domain.is_field:
        raise ValueError(f"Expected a polynomial over a prime field, got {f.domain}")
    return list(f.coeffs), f.domain.characteristic


def degree_partition(f: Polynomial) -> list[int]:
    """
    Degrees of the irreducible factors of a squarefree `f` over F_p, ascending.

    Distinct-degree factorization: the product of all irreducible factors of
    degree k is gcd(f, x^(p^k) - x) once the lower degrees are removed.

    Raises
    ------
    ValueError
        When `f` is not squarefree.
    """
    coeffs, p = _as_int_list(f)
    if len(coeffs) < 2:
        return []
    inv = pow(coeffs[-1], -1, p)
    g = [c * inv % p for c in coeffs]

    if len(_gcd(g, _trim([k * c % p for k, c in enumerate(g)][1:]), p)) > 1:
        raise ValueError(f"{f} is not squarefree over F_{p}")

    parts: list[int] = []
    h = [0, 1]
    k = 0
    while 2 * (k + 1) <= len(g) - 1:
        k += 1
        h = _powmod(h, p, g, p)
        d = _gcd(g, _sub(h, [0, 1], p), p)
        if len(d) > 1:
            parts.extend([k] * ((len(d) - 1) // k))
            g = _divexact(g, d, p)
            h = _rem(h, g, p)
    if len(g) > 1:
        parts.append(len(g) - 1)
    return sorted(parts)


def is_irreducible_fp(f: Polynomial) -> bool:
    """Irreducibility over F_p: squarefree with a single factor in the partition."""
    coeffs, p = _as_int_list(f)
    n = len(coeffs) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    try:
        return degree_partition(f) == [n]
    except ValueError:
        return False
