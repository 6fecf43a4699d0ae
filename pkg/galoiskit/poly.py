"""
Dense univariate polynomials over a coefficient domain.

:class:`Polynomial` stores ``coeffs[i]`` as the coefficient of ``x**i`` with
trailing zeros removed, so the zero polynomial has no coefficients and its
degree is :data:`MINUS_INFINITY`. All values are immutable.

The module-level functions implement the ring-theoretic algorithms: division
with remainder, gcd with Bezout cofactors, derivative, squarefree test,
resultant and discriminant, cyclotomic polynomials and Taylor shifts.
"""

from __future__ import annotations

__all__ = [
    "MINUS_INFINITY",
    "MinusInfinity",
    "Polynomial",
    "content",
    "cyclotomic",
    "cyclotomic_p",
    "derivative",
    "discriminant",
    "divmod_poly",
    "evaluate",
    "gcd",
    "gcd_bezout",
    "map_coefficients",
    "primitive_part",
    "resultant",
    "shift",
    "squarefree",
    "integer_polynomial",
    "to_integer",
]

import functools
import math
import typing
from fractions import Fraction

from galoiskit.domains import QQ, ZZ, NotInvertibleError
from galoiskit.utils import divisors, is_prime

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterable
    from typing import Any

    from galoiskit.domains import Domain


@functools.total_ordering
class MinusInfinity:
    """The degree of the zero polynomial: below every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash(float("-inf"))

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int | MinusInfinity):
            return other is not self
        return NotImplemented

    def __add__(self, other: object) -> MinusInfinity:
        if isinstance(other, int | MinusInfinity):
            return self
        return NotImplemented

    __radd__ = __add__


MINUS_INFINITY = MinusInfinity()


class Polynomial:
    """A dense univariate polynomial in canonical form."""

    __slots__ = ("coeffs", "domain")

    coeffs: tuple[Any, ...]
    domain: Domain

    def __init__(self, coeffs: Iterable[Any] = (), domain: Domain = QQ):
        values = [domain.convert(c) for c in coeffs]
        while values and domain.is_zero(values[-1]):
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))
        object.__setattr__(self, "domain", domain)

    @classmethod
    def _raw(cls, coeffs: list[Any], domain: Domain) -> Polynomial:
        # skip conversion; coefficients already belong to the domain
        while coeffs and domain.is_zero(coeffs[-1]):
            coeffs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        object.__setattr__(obj, "domain", domain)
        return obj

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    # PART/ constructors

    @classmethod
    def zero(cls, domain: Domain = QQ) -> Polynomial:
        return cls((), domain)

    @classmethod
    def one(cls, domain: Domain = QQ) -> Polynomial:
        return cls._raw([domain.one], domain)

    @classmethod
    def x(cls, domain: Domain = QQ) -> Polynomial:
        return cls._raw([domain.zero, domain.one], domain)

    @classmethod
    def constant(cls, c: Any, domain: Domain = QQ) -> Polynomial:
        return cls((c,), domain)

    @classmethod
    def monomial(cls, c: Any, k: int, domain: Domain = QQ) -> Polynomial:
        return cls._raw([domain.zero] * k + [domain.convert(c)], domain)

    @classmethod
    def from_roots(cls, roots: Iterable[Any], domain: Domain = QQ) -> Polynomial:
        """The monic polynomial prod(x - r)."""
        result = cls.one(domain)
        x = cls.x(domain)
        for r in roots:
            result *= x - cls.constant(r, domain)
        return result

    # PART/ basic properties

    @property
    def degree(self) -> int | MinusInfinity:
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        """Leading coefficient; zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.domain.is_one(self.coeffs[-1])

    def __getitem__(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            if self.domain != other.domain or len(self.coeffs) != len(other.coeffs):
                return False
            return all(
                self.domain.eq(a, b)
                for a, b in zip(self.coeffs, other.coeffs, strict=True)
            )
        if isinstance(other, int | Fraction):
            return self == Polynomial.constant(other, self.domain)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.domain, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r}, {self.domain!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        """Render in descending powers, e.g. ``x^5 - 4x + 2``."""
        if not self.coeffs:
            return "0"

        terms: list[tuple[str, str]] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.domain.is_zero(c):
                continue

            sign = "+"
            text = self.domain.format(c)
            if isinstance(c, int | Fraction) and c < 0:
                sign, text = "-", self.domain.format(-c)
            elif not text.replace("/", "").isdigit():
                text = f"({text})"

            if k == 0:
                terms.append((sign, text))
                continue
            monomial = var if k == 1 else f"{var}^{k}"
            if text == "1":
                text = ""
            terms.append((sign, text + monomial))

        first_sign, first_text = terms[0]
        parts = ["-" + first_text if first_sign == "-" else first_text]
        for sign, text in terms[1:]:
            parts.append(f"{sign} {text}")
        return " ".join(parts)

    # PART/ ring operations

    def _coerce(self, other: Any) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.domain != self.domain:
                raise ValueError(
                    f"Polynomials over different domains: {self.domain} and {other.domain}"
                )
            return other
        return Polynomial.constant(other, self.domain)

    def __add__(self, other: Any) -> Polynomial:
        other = self._coerce(other)
        dom = self.domain
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = dom.add(out[i], c)
        return Polynomial._raw(out, dom)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        dom = self.domain
        return Polynomial._raw([dom.neg(c) for c in self.coeffs], dom)

    def __sub__(self, other: Any) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> Polynomial:
        other = self._coerce(other)
        dom = self.domain
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(dom)
        out = [dom.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if dom.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = dom.add(out[i + j], dom.mul(ai, bj))
        return Polynomial._raw(out, dom)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("Negative powers of polynomials are not defined")
        result = Polynomial.one(self.domain)
        base = self
        while k:
            if k & 1:
                result *= base
            base *= base
            k >>= 1
        return result

    def __divmod__(self, other: Any) -> tuple[Polynomial, Polynomial]:
        return divmod_poly(self, self._coerce(other))

    def __floordiv__(self, other: Any) -> Polynomial:
        q, _ = divmod(self, other)
        return q

    def __mod__(self, other: Any) -> Polynomial:
        _, r = divmod(self, other)
        return r

    def __call__(self, c: Any) -> Any:
        return evaluate(self, c)

    def scale(self, c: Any) -> Polynomial:
        dom = self.domain
        c = dom.convert(c)
        return Polynomial._raw([dom.mul(c, a) for a in self.coeffs], dom)

    def monic(self) -> Polynomial:
        """Divide by the leading coefficient."""
        if not self.coeffs:
            raise ValueError("The zero polynomial has no monic associate")
        return self.scale(self.domain.inv(self.lc))

    def derivative(self) -> Polynomial:
        return derivative(self)

    def shift(self, a: Any) -> Polynomial:
        return shift(self, a)

    def compose(self, g: Polynomial) -> Polynomial:
        """f(g(x)) by Horner's scheme."""
        result = Polynomial.zero(self.domain)
        for c in reversed(self.coeffs):
            result = result * g + Polynomial._raw([c], self.domain)
        return result

    def pow_mod(self, k: int, modulus: Polynomial) -> Polynomial:
        """self**k reduced modulo `modulus`."""
        result = Polynomial.one(self.domain) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def map_coefficients(self, sigma: Callable[[Any], Any], domain: Domain) -> Polynomial:
        return map_coefficients(self, sigma, domain)

    def with_domain(self, domain: Domain) -> Polynomial:
        """Reinterpret the coefficients in another domain via ``domain.convert``."""
        return Polynomial(self.coeffs, domain)


def divmod_poly(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """
    Division with remainder: f = q*g + r with deg r < deg g.

    Requires the leading coefficient of `g` to be a unit of the domain, so it
    also works over rings that are not fields as long as `g` is monic.

    Raises
    ------
    ZeroDivisionError
        When `g` is the zero polynomial.
    NotInvertibleError
        When the leading coefficient of `g` is not a unit.
    """
    dom = f.domain
    if g.domain != dom:
        raise ValueError(f"Polynomials over different domains: {dom} and {g.domain}")
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")

    try:
        lc_inv = dom.inv(g.lc)
    except NotInvertibleError:
        raise NotInvertibleError(
            f"Leading coefficient {dom.format(g.lc)} of the divisor is not invertible in {dom}"
        ) from None

    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return Polynomial.zero(dom), f

    q = [dom.zero] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = dom.mul(r[k + dg], lc_inv)
        q[k] = c
        if dom.is_zero(c):
            continue
        for j, gj in enumerate(g.coeffs):
            r[k + j] = dom.sub(r[k + j], dom.mul(c, gj))
    return Polynomial._raw(q, dom), Polynomial._raw(r[:dg], dom)


def gcd_bezout(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """
    Extended Euclid over a field.

    Returns ``(d, a0, b0)`` with `d` the monic gcd of `f` and `g` and
    ``d == a0*f + b0*g``.

    Raises
    ------
    ValueError
        When both inputs are zero.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")

    dom = f.domain
    zero, one = Polynomial.zero(dom), Polynomial.one(dom)
    r0, s0, t0 = f, one, zero
    r1, s1, t1 = g, zero, one
    while not r1.is_zero():
        q, r = divmod_poly(r0, r1)
        r0, s0, t0, r1, s1, t1 = r1, s1, t1, r, s0 - q * s1, t0 - q * t1

    inv = dom.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Monic gcd.

    Over the rationals the denominators are cleared and the Euclidean
    sequence is run on primitive integer polynomials to keep coefficients
    small; the answer is normalized to be monic at the end.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if f.domain != QQ:
        d, _, _ = gcd_bezout(f, g)
        return d

    a = primitive_part(f) if f else f
    b = primitive_part(g) if g else g
    while b:
        # pseudo-remainder keeps everything integral
        scale = b.lc ** (max(len(a) - len(b) + 1, 0))
        _, r = divmod_poly(a.scale(scale), b)
        a, b = b, (primitive_part(r) if r else r)
    return a.monic()


def derivative(f: Polynomial) -> Polynomial:
    """Formal derivative: sum k*a_k*x^(k-1)."""
    dom = f.domain
    return Polynomial._raw(
        [dom.mul(dom.convert(k), c) for k, c in enumerate(f.coeffs) if k > 0],
        dom,
    )


def squarefree(f: Polynomial) -> bool:
    """True iff gcd(f, f') = 1, i.e. `f` has no repeated roots."""
    if f.is_zero():
        raise ValueError("The zero polynomial is not squarefree")
    d = gcd(f, derivative(f))
    return d.degree == 0


def evaluate(f: Polynomial, c: Any) -> Any:
    """Evaluate `f` at `c` by Horner's scheme."""
    dom = f.domain
    if isinstance(c, Polynomial):
        return f.compose(c)

    # an element of an extension of the coefficient domain
    owner = getattr(c, "owner", None)
    if owner is not None and owner != dom:
        acc = owner.zero
        for a in reversed(f.coeffs):
            acc = acc * c + a
        return acc

    c = dom.convert(c)
    acc = dom.zero
    for a in reversed(f.coeffs):
        acc = dom.add(dom.mul(acc, c), a)
    return acc


def map_coefficients(
    f: Polynomial, sigma: Callable[[Any], Any], domain: Domain
) -> Polynomial:
    """Apply a ring homomorphism to every coefficient; the degree may drop."""
    return Polynomial((sigma(c) for c in f.coeffs), domain)


def resultant(f: Polynomial, g: Polynomial) -> Any:
    """
    Resultant over a field, by the Euclidean remainder sequence.

    Uses res(f, g) = (-1)^(nm) res(g, f) and
    res(f, g) = (-1)^(nm) lc(g)^(n-k) res(g, f mod g) with k = deg(f mod g).
    """
    dom = f.domain
    if f.is_zero() or g.is_zero():
        return dom.zero

    sign = dom.one
    result = dom.one
    while True:
        n, m = len(f.coeffs) - 1, len(g.coeffs) - 1
        if n < m:
            f, g = g, f
            if n * m % 2:
                sign = dom.neg(sign)
            continue
        if m == 0:
            return dom.mul(sign, dom.mul(result, dom.power(g.lc, n)))

        _, r = divmod_poly(f, g)
        if r.is_zero():
            return dom.zero

        k = len(r.coeffs) - 1
        if n * m % 2:
            sign = dom.neg(sign)
        result = dom.mul(result, dom.power(g.lc, n - k))
        f, g = g, r


def discriminant(f: Polynomial) -> Any:
    """
    disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).

    This equals lc(f)^(2n-2) times the product of (a_i - a_j)^2 over pairs of
    roots, so for monic `f` it is exactly the product of squared root
    differences.

    Raises
    ------
    ValueError
        When `f` is constant.
    """
    n = len(f.coeffs) - 1
    if n < 1:
        raise ValueError("The discriminant of a constant polynomial is undefined")
    dom = f.domain
    res = resultant(f, derivative(f))
    if (n * (n - 1) // 2) % 2:
        res = dom.neg(res)
    return dom.div(res, f.lc)


@functools.lru_cache(64)
def cyclotomic_p(p: int) -> Polynomial:
    """x^(p-1) + ... + x + 1 for a prime `p`."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    return Polynomial([1] * p, QQ)


@functools.lru_cache(64)
def cyclotomic(n: int) -> Polynomial:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError(f"Cyclotomic index must be positive, got {n}")
    f = Polynomial.monomial(1, n) - 1
    for d in divisors(n):
        if d < n:
            f //= cyclotomic(d)
    return f


def shift(f: Polynomial, a: Any) -> Polynomial:
    """f(x + a), computed by repeated synthetic division (Taylor shift)."""
    dom = f.domain
    a = dom.convert(a)
    coeffs = list(f.coeffs)
    n = len(coeffs)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            coeffs[k] = dom.add(coeffs[k], dom.mul(a, coeffs[k + 1]))
    return Polynomial._raw(coeffs, dom)


def content(f: Polynomial) -> Fraction:
    """
    Rational content of a polynomial over QQ.

    ``f / content(f)`` has coprime integer coefficients and a positive
    leading coefficient; the sign of the content follows lc(f).
    """
    if f.is_zero():
        return Fraction(0)
    coeffs = [Fraction(c) for c in f.coeffs]
    den = math.lcm(*(c.denominator for c in coeffs))
    num = math.gcd(*(int(c * den) for c in coeffs))
    c = Fraction(num, den)
    return -c if coeffs[-1] < 0 else c


def primitive_part(f: Polynomial) -> Polynomial:
    """f / content(f): integer coefficients, gcd 1, positive leading coefficient."""
    if f.is_zero():
        raise ValueError("The zero polynomial has no primitive part")
    c = content(f)
    return Polynomial([Fraction(a) / c for a in f.coeffs], f.domain)


def to_integer(f: Polynomial) -> list[int]:
    """Integer coefficient list of a polynomial over QQ with integral coefficients."""
    out = []
    for c in f.coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"Coefficient {c} is not an integer")
        out.append(c.numerator)
    return out


def integer_polynomial(f: Polynomial) -> Polynomial:
    """The primitive part of `f` as a polynomial over ZZ."""
    return Polynomial(to_integer(primitive_part(f)), ZZ)
