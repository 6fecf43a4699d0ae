"""
:mod:`galoiskit`, exact computations in Galois theory.

The toolkit works with polynomials over the rationals and over finite fields.
It decides irreducibility with certificates, builds finite fields and number
fields, classifies Galois groups of polynomials of degree at most 5 and decides
ruler-and-compass constructibility.

This package exposes only the core components:

- :class:`Polynomial`: Dense univariate polynomials over a coefficient domain.
- :data:`hookimpl`: The hook implementation marker for irreducibility tests.

The algorithms live in the submodules (:mod:`galoiskit.poly`,
:mod:`galoiskit.modp`, :mod:`galoiskit.numfield`, :mod:`galoiskit.irr`,
:mod:`galoiskit.galois`, :mod:`galoiskit.permgrp`, :mod:`galoiskit.construct`)
and are intended to be imported explicitly.
"""

__all__ = [
    "__version__",
    "Polynomial",
    "hookimpl",
]

from galoiskit.core import hookimpl
from galoiskit.poly import Polynomial
from galoiskit.version import __version__
