"""
Ruler and compass constructions.

A constructible number has a minimal polynomial whose degree is a power of
two. The converse fails in general, so for arbitrary numbers only the
necessary condition is decided. Regular polygons and the angles pi/n are
decided completely: the n-gon is constructible exactly when n is a power of
two times a product of distinct Fermat primes.
"""

from __future__ import annotations

__all__ = [
    "angle_degrees_constructible",
    "angle_pi_over_n_constructible",
    "constructible_angles",
    "fermat_number_exponents",
    "is_fermat_prime",
    "ngon_constructible",
    "number_necessary_test",
    "platonic_doubling",
]

import logging
import typing
from fractions import Fraction

from frozendict import frozendict

from galoiskit.irr import is_irreducible_q
from galoiskit.poly import Polynomial
from galoiskit.types import Answer, ConstructibilityVerdict, Verdict
from galoiskit.utils import factorize, get_suggestion, is_power_of_two, is_prime

logger = logging.getLogger(__name__)

KNOWN_FERMAT_PRIMES = (3, 5, 17, 257, 65537)

MAX_FERMAT_EXPONENT = 64

DOUBLING_POLYNOMIALS: frozendict[str, Polynomial] = frozendict(
    {
        "tetrahedron": Polynomial([-2, 0, 0, 1]),
        "cube": Polynomial([-2, 0, 0, 1]),
        "octahedron": Polynomial([-2, 0, 0, 1]),
        "dodecahedron": Polynomial([-2, 0, 0, 1]),
        "icosahedron": Polynomial([-2, 0, 0, 1]),
        "hypercube": Polynomial([-2, 0, 0, 0, 1]),
    }
)
"""
Minimal polynomial of the edge scaling factor that doubles the volume: the
cube root of 2 for solids, the fourth root for the four-dimensional cube.
"""


def is_fermat_prime(p: int) -> bool:
    """Whether `p` is a prime of the form 2^(2^t) + 1."""
    if p < 3:
        return False
    if p <= KNOWN_FERMAT_PRIMES[-1]:
        return p in KNOWN_FERMAT_PRIMES
    n = p - 1
    return is_power_of_two(n) and is_power_of_two(n.bit_length() - 1) and is_prime(p)


def _polygon_verdict(n: int, subject: str) -> ConstructibilityVerdict:
    factors = factorize(n)
    odd = {p: k for p, k in factors.items() if p != 2}

    if repeated := [p for p, k in odd.items() if k > 1]:
        answer = Answer.no
        reason = f"{subject}: the odd prime {repeated[0]} divides {n} more than once"
    elif others := [p for p in odd if not is_fermat_prime(p)]:
        answer = Answer.no
        reason = f"{subject}: {others[0]} is not a Fermat prime"
    else:
        answer = Answer.yes
        reason = f"{subject}: {n} is a power of 2 times distinct Fermat primes"

    return ConstructibilityVerdict(answer=answer, reason=reason, factorization=factors)


def ngon_constructible(n: int) -> ConstructibilityVerdict:
    """
    Decide whether the regular n-gon can be constructed.

    Raises
    ------
    ValueError
        When ``n < 3``.
    """
    if n < 3:
        raise ValueError(f"A polygon has at least 3 sides, got {n}")
    return _polygon_verdict(n, f"regular {n}-gon")


def angle_pi_over_n_constructible(n: int) -> ConstructibilityVerdict:
    """
    Decide whether the angle pi/n can be constructed; this is the same
    question as for the regular 2n-gon.
    """
    if n < 1:
        raise ValueError(f"Expected a positive integer, got {n}")
    if n <= 2:
        return ConstructibilityVerdict(
            answer=Answer.yes,
            reason=f"pi/{n}: a straight or right angle",
            factorization=factorize(n),
        )
    return _polygon_verdict(2 * n, f"pi/{n} (regular {2 * n}-gon)")


def angle_degrees_constructible(degrees: Fraction | int) -> ConstructibilityVerdict:
    """
    Decide whether an angle given in degrees can be constructed.

    For r = p/q in lowest terms the angle r*pi is constructible exactly when
    the regular q-gon is.
    """
    r = Fraction(degrees) / 180
    q = r.denominator
    if q <= 2:
        return ConstructibilityVerdict(
            answer=Answer.yes,
            reason=f"{degrees} degrees is a multiple of a right angle",
            factorization=factorize(q),
        )
    return _polygon_verdict(q, f"{degrees} degrees (regular {q}-gon)")


def constructible_angles(limit: int) -> list[int]:
    """The n with 2 <= n <= limit for which pi/n can be constructed."""
    return [
        n for n in range(2, limit + 1) if angle_pi_over_n_constructible(n).answer == Answer.yes
    ]


def fermat_number_exponents(limit: int) -> list[int]:
    """The n with 1 <= n <= limit for which 2^n + 1 is prime."""
    if limit > MAX_FERMAT_EXPONENT:
        raise ValueError(f"The limit is at most {MAX_FERMAT_EXPONENT}, got {limit}")
    return [n for n in range(1, limit + 1) if is_prime(2**n + 1)]


def number_necessary_test(subject: int | Polynomial) -> ConstructibilityVerdict:
    """
    Apply the power-of-two test to a degree, or to the degree of an
    irreducible rational polynomial.

    The answer is never "yes": a degree that is a power of two does not make
    a number constructible.

    Raises
    ------
    ValueError
        When the polynomial is reducible or its irreducibility cannot be
        certified, or when the degree is not positive.
    """
    if isinstance(subject, Polynomial):
        cert = is_irreducible_q(subject)
        if cert.verdict != Verdict.irreducible:
            raise ValueError(
                f"{subject} must be irreducible over QQ, got verdict {cert.verdict}"
            )
        degree = len(subject.coeffs) - 1
        name = subject.format()
    else:
        degree = subject
        name = f"degree {degree}"
        if degree < 1:
            raise ValueError(f"Degrees of extensions are positive, got {degree}")

    if is_power_of_two(degree):
        return ConstructibilityVerdict(
            answer=Answer.necessary_condition_holds,
            reason=f"{name}: degree {degree} is a power of 2",
            degree=degree,
        )
    return ConstructibilityVerdict(
        answer=Answer.necessary_condition_fails,
        reason=f"{name}: degree {degree} is not a power of 2",
        degree=degree,
    )


def platonic_doubling(solid: str) -> ConstructibilityVerdict:
    """Can the edge of a solid with twice the volume be constructed?"""
    key = solid.strip().lower()
    try:
        f = DOUBLING_POLYNOMIALS[key]
    except KeyError:
        message = f"Unknown solid {solid!r}"
        if suggestion := get_suggestion(key, DOUBLING_POLYNOMIALS):
            message += f"; did you mean {suggestion!r}?"
        raise ValueError(message) from None

    verdict = number_necessary_test(f)
    logger.debug("Doubling the %s: %s", key, verdict.reason)
    return verdict
