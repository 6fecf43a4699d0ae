"""
Irreducibility over the rationals.

:func:`is_irreducible_q` clears the content of its input and runs the tests
registered for the ``certify_irreducible`` hook, cheapest first:

1. rational roots (decides degrees 2 and 3 on its own),
2. Eisenstein's criterion on f(x + a) for small shifts a,
3. reduction modulo small primes,
4. a bounded search for quadratic factors (decides degrees 4 and 5).

By Gauss's lemma it is enough to look for factors with integer
coefficients, so every test works on the primitive integer polynomial.
"""

from __future__ import annotations

__all__ = [
    "IrreducibilityCertificate",
    "Verdict",
    "eisenstein",
    "factor_q",
    "is_irreducible_q",
    "possible_factor_degrees",
    "quadratic_factor",
    "rational_roots",
    "reduction_test",
]

import logging
import typing
from fractions import Fraction

from galoiskit.core import get_plugin_manager
from galoiskit.domains import QQ
from galoiskit.irr.eisenstein import eisenstein
from galoiskit.irr.factor_search import quadratic_factor
from galoiskit.irr.rational_roots import rational_roots
from galoiskit.irr.reduction import possible_factor_degrees, reduction_test
from galoiskit.poly import Polynomial, content, primitive_part
from galoiskit.types import Exhausted, IrreducibilityCertificate, Verdict

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

logger = logging.getLogger(__name__)


def is_irreducible_q(f: Polynomial) -> IrreducibilityCertificate:
    """
    Decide irreducibility of `f` over the rationals.

    The answer is never Unknown for degrees 1 to 5. Reducible certificates
    carry a rational root or an explicit factor pair of the primitive part.

    Raises
    ------
    ValueError
        When `f` is constant.
    """
    f = f.with_domain(QQ)
    if f.is_constant():
        raise ValueError("Constant polynomials are neither irreducible nor reducible")
    if len(f.coeffs) == 2:
        return IrreducibilityCertificate(verdict=Verdict.irreducible, witness=Exhausted())

    g = primitive_part(f)
    pm = get_plugin_manager()
    if cert := pm.hook.certify_irreducible(poly=g):
        logger.debug("%s: %s by %s", f, cert.verdict, type(cert.witness).__name__)
        return cert

    logger.debug("%s: every irreducibility test passed without a verdict", f)
    return IrreducibilityCertificate(verdict=Verdict.unknown, witness=Exhausted())


def _sort_key(f: Polynomial) -> tuple[int, Sequence[Fraction]]:
    return len(f.coeffs), f.coeffs


def factor_q(f: Polynomial) -> tuple[Fraction, list[tuple[Polynomial, int]]]:
    """
    Factor `f` over the rationals into primitive irreducible integer
    polynomials with multiplicities, so that ``c * prod(g**m) == f``.

    Linear factors come from the rational roots and quadratic factors from
    the bounded search; a cofactor of degree > 5 must be certified
    irreducible by :func:`is_irreducible_q`.

    Raises
    ------
    ValueError
        When a cofactor of degree > 5 cannot be certified.
    """
    f = f.with_domain(QQ)
    if f.is_zero():
        raise ValueError("Cannot factor the zero polynomial")

    c = content(f)
    remaining = primitive_part(f)
    found: dict[Polynomial, int] = {}

    def divide_out(g: Polynomial) -> None:
        nonlocal remaining
        while True:
            q, r = divmod(remaining, g)
            if not r.is_zero():
                return
            remaining = q
            found[g] = found.get(g, 0) + 1

    for root in rational_roots(remaining) if not remaining.is_constant() else []:
        divide_out(Polynomial([-root.numerator, root.denominator], QQ))

    while len(remaining.coeffs) - 1 >= 4:
        if len(remaining.coeffs) - 1 > 5:
            cert = is_irreducible_q(remaining)
            if cert.verdict != Verdict.irreducible:
                raise ValueError(f"Cannot factor {remaining} over QQ")
            break
        q = quadratic_factor(remaining)
        if q is None:
            break
        divide_out(q)

    if not remaining.is_constant():
        # the cofactor has no linear or quadratic factor left
        found[remaining] = found.get(remaining, 0) + 1
    else:
        # fold the sign left over by the primitive cofactors into the content
        c *= Fraction(remaining.lc)

    return c, sorted(found.items(), key=lambda item: _sort_key(item[0]))
