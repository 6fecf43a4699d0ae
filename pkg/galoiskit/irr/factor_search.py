"""
Bounded search for small factors of integer polynomials.

Together with the rational root test this decides irreducibility for every
degree up to 5: a reducible polynomial of degree at most 5 has a factor of
degree 1 or 2.
"""

from __future__ import annotations

import logging
import math
import typing

from galoiskit.core import hookimpl
from galoiskit.domains import QQ
from galoiskit.irr.rational_roots import rational_roots
from galoiskit.poly import Polynomial, primitive_part, to_integer
from galoiskit.types import (
    Exhausted,
    FactorPair,
    IrreducibilityCertificate,
    Verdict,
)
from galoiskit.utils import divisors

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)

MAX_CERTIFIED_DEGREE = 5


def cauchy_bound(coeffs: list[int]) -> int:
    """Every complex root has absolute value below 1 + max|a_i / a_n|."""
    top = abs(coeffs[-1])
    return 1 + math.ceil(max(abs(c) for c in coeffs[:-1]) / top) if len(coeffs) > 1 else 1


def _monic_transform(coeffs: list[int]) -> list[int]:
    """Coefficients of a_n^(n-1) f(y / a_n), a monic integer polynomial."""
    n = len(coeffs) - 1
    lc = coeffs[-1]
    return [c * lc ** (n - 1 - i) if i < n else 1 for i, c in enumerate(coeffs)]


def _signed_divisors(n: int, limit: int) -> list[int]:
    return [s * d for d in divisors(n) if d <= limit for s in (1, -1)]


def _quadratic_candidates(g: list[int]) -> Iterator[tuple[int, int]]:
    bound = cauchy_bound(g)
    if g[0] != 0:
        vs = _signed_divisors(g[0], bound * bound)
    else:
        vs = list(range(-bound * bound, bound * bound + 1))

    # q(1) divides g(1) and q(-1) divides g(-1)
    g_at_1, g_at_minus_1 = sum(g), sum(c if i % 2 == 0 else -c for i, c in enumerate(g))
    q1_values = _signed_divisors(g_at_1, abs(g_at_1)) if g_at_1 else None
    for v in vs:
        if q1_values is None:
            us = range(-2 * bound, 2 * bound + 1)
        else:
            us = sorted(q1 - 1 - v for q1 in q1_values if abs(q1 - 1 - v) <= 2 * bound)
        for u in us:
            qm1 = 1 - u + v
            if qm1 and g_at_minus_1 % qm1:
                continue
            yield u, v


def quadratic_factor(f: Polynomial) -> Polynomial | None:
    """
    A primitive quadratic factor of `f` over the integers, if one exists.

    The search runs on the monic transform g(y) = a_n^(n-1) f(y / a_n): a
    monic factor y^2 + uy + v of g has |u| <= 2B and |v| <= B^2 with B the
    Cauchy root bound, and v divides g(0) when g(0) != 0. A factor of g maps
    back to the primitive part of a_n^2 x^2 + u a_n x + v.
    """
    f = primitive_part(f.with_domain(QQ))
    if len(f.coeffs) < 5:
        return None

    coeffs = to_integer(f)
    g = Polynomial(_monic_transform(coeffs), QQ)
    lc = coeffs[-1]

    for u, v in _quadratic_candidates(to_integer(g)):
        _, r = divmod(g, Polynomial([v, u, 1], QQ))
        if r.is_zero():
            return primitive_part(Polynomial([v, u * lc, lc * lc], QQ))
    return None


@hookimpl(trylast=True)
def certify_irreducible(poly: Polynomial) -> IrreducibilityCertificate | None:
    n = len(poly.coeffs) - 1
    if n > MAX_CERTIFIED_DEGREE:
        return None

    if roots := rational_roots(poly):
        r = roots[0]
        linear = Polynomial([-r.numerator, r.denominator], QQ)
        return IrreducibilityCertificate(
            verdict=Verdict.reducible,
            witness=FactorPair(g=linear, h=poly // linear),
        )

    if q := quadratic_factor(poly):
        logger.debug("%s has the quadratic factor %s", poly, q)
        return IrreducibilityCertificate(
            verdict=Verdict.reducible, witness=FactorPair(g=q, h=poly // q)
        )

    return IrreducibilityCertificate(verdict=Verdict.irreducible, witness=Exhausted())
