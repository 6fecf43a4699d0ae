from __future__ import annotations

import typing

from dirty_equals import DirtyEquals
from hypothesis import strategies as st

from galoiskit.domains import QQ
from galoiskit.poly import Polynomial

if typing.TYPE_CHECKING:
    from typing import Any

    from galoiskit.domains import Domain


class ContainsSubStrings(DirtyEquals[str]):
    def __init__(self, *text: str):
        self.texts = text

    def equals(self, other: Any) -> bool:
        return all(text in other for text in self.texts)


def poly(*coeffs: Any, domain: Domain = QQ) -> Polynomial:
    """Polynomial from coefficients written highest degree first, as on paper."""
    return Polynomial(reversed(coeffs), domain)


small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polynomials(
    draw: st.DrawFn,
    domain: Domain = QQ,
    max_degree: int = 6,
    nonzero: bool = False,
) -> Polynomial:
    """Random polynomials over QQ or over a finite domain."""
    if domain.order is None:
        coefficient = small_rationals
    else:
        coefficient = st.integers(min_value=0, max_value=domain.order - 1)
    coeffs = draw(st.lists(coefficient, min_size=0, max_size=max_degree + 1))
    f = Polynomial(coeffs, domain)
    if nonzero and f.is_zero():
        return Polynomial.one(domain)
    return f
