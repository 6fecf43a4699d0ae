from __future__ import annotations

import logging
import math
import typing

from galoiskit.core import hookimpl
from galoiskit.domains import QQ
from galoiskit.poly import primitive_part, shift, to_integer
from galoiskit.settings import settings
from galoiskit.types import EisensteinPrime, IrreducibilityCertificate, Verdict
from galoiskit.utils import factorize

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    from galoiskit.poly import Polynomial

logger = logging.getLogger(__name__)


def satisfies_eisenstein(coeffs: Sequence[int], p: int) -> bool:
    """p divides c_0..c_(n-1), p does not divide c_n, p^2 does not divide c_0."""
    *lower, top = coeffs
    return (
        bool(lower)
        and all(c % p == 0 for c in lower)
        and top % p != 0
        and coeffs[0] % (p * p) != 0
    )


def eisenstein_primes(coeffs: Sequence[int]) -> list[int]:
    """Primes at which an integer coefficient list satisfies Eisenstein's criterion."""
    *lower, _ = coeffs
    g = math.gcd(*lower) if lower else 0
    return [p for p in sorted(factorize(g)) if satisfies_eisenstein(coeffs, p)]


def shift_order(bound: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ..., bound, -bound."""
    yield 0
    for a in range(1, bound + 1):
        yield a
        yield -a


def eisenstein(f: Polynomial, shifts: Iterable[int] | None = None) -> tuple[int, int] | None:
    """
    Find (p, a) such that f(x + a) is Eisenstein at p.

    Rational coefficients are cleared first. Shifts default to
    ``0, 1, -1, ...`` up to ``settings.eisenstein_shift_bound``; the search
    is a sufficient test only.
    """
    if len(f.coeffs) < 2:
        return None
    g = primitive_part(f.with_domain(QQ))
    if shifts is None:
        shifts = shift_order(settings.eisenstein_shift_bound)

    for a in shifts:
        if primes := eisenstein_primes(to_integer(shift(g, a))):
            return primes[0], a
    return None


@hookimpl
def certify_irreducible(poly: Polynomial) -> IrreducibilityCertificate | None:
    if found := eisenstein(poly):
        p, a = found
        logger.debug("%s is Eisenstein at p=%d after shifting by %d", poly, p, a)
        return IrreducibilityCertificate(
            verdict=Verdict.irreducible, witness=EisensteinPrime(p=p, shift=a)
        )
