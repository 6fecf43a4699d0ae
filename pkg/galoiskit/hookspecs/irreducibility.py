"""
Hook specifications for irreducibility testing over the rationals.

:func:`galoiskit.irr.is_irreducible_q` normalizes its input and then asks the
registered implementations, in turn, for a certificate. The built-in
implementations are the rational root test, Eisenstein's criterion with
shifts, the reduction test and a bounded search for quadratic factors.
Third-party packages may register further tests under the ``galoiskit``
entry point group.
"""

from __future__ import annotations

import typing

import pluggy

if typing.TYPE_CHECKING:
    from galoiskit.poly import Polynomial
    from galoiskit.types import IrreducibilityCertificate

hookspec = pluggy.HookspecMarker("galoiskit")


@hookspec(firstresult=True)
def certify_irreducible(poly: Polynomial) -> IrreducibilityCertificate | None:  # type: ignore[reportReturnType]
    """
    Decide irreducibility of `poly` over the rationals, or pass.

    The framework calls implementations until one returns a certificate.
    Implementations must only answer when they can back the verdict with a
    witness; returning :py:obj:`None` hands the polynomial to the next test.

    Parameters
    ----------
    poly : Polynomial
        A primitive polynomial over QQ with integer coefficients, positive
        leading coefficient and degree at least 2.

    Returns
    -------
    IrreducibilityCertificate
        The verdict and its witness, or :py:obj:`None` to pass.
    """
