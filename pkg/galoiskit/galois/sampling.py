"""
Cycle types of Frobenius elements, read off from factorizations mod p.

For a prime p that divides neither the leading coefficient nor the
discriminant, the degrees of the irreducible factors of f mod p are the
cycle lengths of some element of the Galois group acting on the roots, and
every cycle type of the group turns up with positive density as p varies.
"""

from __future__ import annotations

import logging
import typing
from fractions import Fraction

from galoiskit.domains import QQ, PrimeField
from galoiskit.modp import degree_partition
from galoiskit.poly import Polynomial, discriminant, primitive_part, to_integer
from galoiskit.settings import settings
from galoiskit.types import CycleTypeSample
from galoiskit.utils import iter_primes

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)


def iter_cycle_types(f: Polynomial) -> Iterator[CycleTypeSample]:
    """
    Yield the factor-degree partition of f mod p for every admissible prime,
    in ascending order of p.

    Admissible means p divides neither lc(F) nor disc(F), for F the primitive
    integer associate of `f`; f mod p is then squarefree.

    Raises
    ------
    ValueError
        When `f` is constant or has a repeated root.
    """
    F = primitive_part(f.with_domain(QQ))
    if F.is_constant():
        raise ValueError("Cycle types are only defined for nonconstant polynomials")

    coeffs = to_integer(F)
    disc = Fraction(discriminant(F))
    if disc == 0:
        raise ValueError(f"{f} has a repeated root")
    disc_int = disc.numerator

    for p in iter_primes():
        if coeffs[-1] % p == 0 or disc_int % p == 0:
            continue
        reduced = Polynomial([c % p for c in coeffs], PrimeField(p))
        try:
            parts = degree_partition(reduced)
        except ValueError:
            continue
        yield CycleTypeSample(p=p, partition=tuple(sorted(parts, reverse=True)))


def cycle_type_samples(f: Polynomial, max_primes: int | None = None) -> list[CycleTypeSample]:
    """The first `max_primes` admissible samples; see :func:`iter_cycle_types`."""
    if max_primes is None:
        max_primes = settings.max_primes

    samples = []
    for sample in iter_cycle_types(f):
        samples.append(sample)
        if len(samples) >= max_primes:
            break

    logger.debug("Sampled %d primes for %s, up to p=%d", len(samples), f, samples[-1].p)
    return samples
