from __future__ import annotations

import logging
import typing
from fractions import Fraction

from galoiskit.core import hookimpl
from galoiskit.poly import primitive_part, to_integer
from galoiskit.types import (
    Exhausted,
    IrreducibilityCertificate,
    RationalRoot,
    Verdict,
)
from galoiskit.utils import divisors

if typing.TYPE_CHECKING:
    from galoiskit.poly import Polynomial

logger = logging.getLogger(__name__)


def rational_roots(f: Polynomial) -> list[Fraction]:
    """
    All rational roots of `f`, ascending.

    After clearing denominators a root m/n in lowest terms has m dividing the
    constant term and n dividing the leading coefficient, so the candidates
    are finite.
    """
    if f.is_zero():
        raise ValueError("The zero polynomial vanishes everywhere")
    if f.is_constant():
        return []

    coeffs = to_integer(primitive_part(f))

    roots = set()
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)

    def value_at(r: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * r + c
        return acc

    for m in divisors(coeffs[0]):
        for n in divisors(coeffs[-1]):
            for candidate in (Fraction(m, n), Fraction(-m, n)):
                if candidate not in roots and value_at(candidate) == 0:
                    roots.add(candidate)

    return sorted(roots)


@hookimpl
def certify_irreducible(poly: Polynomial) -> IrreducibilityCertificate | None:
    if roots := rational_roots(poly):
        logger.debug("%s has the rational root %s", poly, roots[0])
        return IrreducibilityCertificate(
            verdict=Verdict.reducible, witness=RationalRoot(root=roots[0])
        )

    # without a linear factor a quadratic or cubic cannot split
    if len(poly.coeffs) - 1 <= 3:
        return IrreducibilityCertificate(verdict=Verdict.irreducible, witness=Exhausted())
