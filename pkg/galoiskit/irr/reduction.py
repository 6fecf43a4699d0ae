"""
Irreducibility by reduction modulo primes.

If p does not divide the leading coefficient and f mod p is irreducible over
F_p, then f is irreducible over QQ. Irreducibility mod p is decided with the
distinct-degree test of :func:`galoiskit.modp.is_irreducible_fp` rather than
by factoring with :func:`galoiskit.modp.factor_over_fp` or by root search and
trial division; the answers agree and the distinct-degree test is
polynomial in p.

:func:`possible_factor_degrees` goes one step further for polynomials that
split at every small prime: a factor of degree d over QQ reduces to a product
of factors mod p whose degrees sum to d, so d must be a subset sum of every
degree pattern.
"""

from __future__ import annotations

import logging
import typing
from fractions import Fraction

from galoiskit.core import hookimpl
from galoiskit.domains import PrimeField
from galoiskit.modp import degree_partition, is_irreducible_fp
from galoiskit.settings import settings
from galoiskit.types import IrreducibilityCertificate, ReductionPrime, Verdict
from galoiskit.utils import primes_up_to

if typing.TYPE_CHECKING:
    from collections.abc import Iterable

    from galoiskit.poly import Polynomial

logger = logging.getLogger(__name__)


def reduce_mod(f: Polynomial, p: int) -> Polynomial:
    """The image of an integer polynomial under the map ZZ -> F_p."""
    field = PrimeField(p)
    return f.map_coefficients(lambda c: Fraction(c).numerator % p, field)


def reduction_test(f: Polynomial, primes: Iterable[int]) -> int | None:
    """
    First prime p such that f mod p has the same degree as f and is
    irreducible over F_p. `f` must have integer coefficients.
    """
    for p in primes:
        if Fraction(f.lc).numerator % p == 0:
            logger.debug("Reduction mod %d drops the degree of %s", p, f)
            continue
        if is_irreducible_fp(reduce_mod(f, p)):
            return p
        logger.debug("%s is reducible mod %d", f, p)
    return None


def possible_factor_degrees(f: Polynomial, primes: Iterable[int]) -> set[int]:
    """
    Degrees that a factor of `f` over QQ can have, judging by the degree
    patterns of f mod p. `f` must have integer coefficients.

    Primes dividing the leading coefficient or where f mod p is not
    squarefree are skipped. The result always holds 0 and deg f; when
    nothing else is left, `f` is irreducible.
    """
    n = len(f.coeffs) - 1
    possible = set(range(n + 1))
    for p in primes:
        if Fraction(f.lc).numerator % p == 0:
            continue
        try:
            parts = degree_partition(reduce_mod(f, p))
        except ValueError:
            logger.debug("%s is not squarefree mod %d", f, p)
            continue

        sums = {0}
        for d in parts:
            sums |= {s + d for s in sums}
        possible &= sums
        if len(possible) == 2:
            logger.debug("Degree patterns up to %d rule out every proper factor of %s", p, f)
            break
    return possible


@hookimpl
def certify_irreducible(poly: Polynomial) -> IrreducibilityCertificate | None:
    if p := reduction_test(poly, primes_up_to(settings.reduction_prime_bound)):
        logger.debug("%s is irreducible mod %d", poly, p)
        return IrreducibilityCertificate(
            verdict=Verdict.irreducible, witness=ReductionPrime(p=p)
        )
