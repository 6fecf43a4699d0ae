"""
Result models shared across the toolkit.

These are frozen pydantic models; the command line front end emits them with
``model_dump(mode="json")``. Polynomials serialize as a human readable string
plus the coefficient list (lowest degree first), rationals as ``"p/q"``
strings when they are not integers.
"""

from __future__ import annotations

import enum
import typing
from fractions import Fraction
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, model_serializer

from galoiskit.poly import Polynomial

if typing.TYPE_CHECKING:
    from typing import Any

    from pydantic import SerializerFunctionWrapHandler


def serialize_rational(value: Fraction | int) -> int | str:
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return str(value)


def serialize_polynomial(f: Polynomial) -> dict[str, Any]:
    return {
        "poly": f.format(),
        "coeffs": [
            serialize_rational(c) if isinstance(c, int | Fraction) else str(c)
            for c in f.coeffs
        ],
    }


type RationalValue = Annotated[Fraction, PlainSerializer(serialize_rational)]
type PolynomialValue = Annotated[Polynomial, PlainSerializer(serialize_polynomial)]


class _BaseModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


# PART/ irreducibility


class Verdict(enum.StrEnum):
    irreducible = "irreducible"
    reducible = "reducible"
    unknown = "unknown"


class _Witness(_BaseModel):
    """Witnesses serialize nested under their kind, e.g. ``{"eisenstein": {...}}``."""

    @model_serializer(mode="wrap")
    def _nest_under_kind(self, handler: SerializerFunctionWrapHandler) -> dict[str, Any]:
        data = handler(self)
        kind = data.pop("kind")
        return {kind: data}


class EisensteinPrime(_Witness):
    """f(x + shift) satisfies Eisenstein's criterion at p."""

    kind: Literal["eisenstein"] = "eisenstein"
    p: int
    shift: int


class ReductionPrime(_Witness):
    """f mod p keeps its degree and is irreducible over F_p."""

    kind: Literal["reduction"] = "reduction"
    p: int


class RationalRoot(_Witness):
    """A rational root, hence a linear factor."""

    kind: Literal["rational_root"] = "rational_root"
    root: RationalValue


class FactorPair(_Witness):
    """A nontrivial factorization of the primitive part."""

    kind: Literal["factor_pair"] = "factor_pair"
    g: PolynomialValue
    h: PolynomialValue


class Exhausted(_Witness):
    """
    Every candidate factor was ruled out (irreducible), or every test ran
    without a conclusion (unknown).
    """

    kind: Literal["exhausted"] = "exhausted"


type Witness = Annotated[
    EisensteinPrime | ReductionPrime | RationalRoot | FactorPair | Exhausted,
    Field(discriminator="kind"),
]


class IrreducibilityCertificate(_BaseModel):

    verdict: Verdict
    witness: Witness


# PART/ Galois groups


class CycleTypeSample(_BaseModel):
    """Factor degrees of f mod p for an unramified prime p."""

    p: int
    partition: tuple[int, ...]


class GaloisClass(_BaseModel):
    """A classified Galois group of a polynomial of degree at most 5."""

    label: str
    """Group name such as ``S5``, ``F20``, ``C2``, ``Trivial`` or ``Reducible``."""

    order: int
    """Order of the group, i.e. the degree of the splitting field."""

    solvable: bool
    """Whether the group is soluble, i.e. the polynomial is solvable by radicals."""

    degree: int
    """Degree of the classified polynomial."""

    discriminant: RationalValue | None = None

    disc_square: bool | None = None
    """Whether the discriminant is the square of a rational."""

    cycle_types: tuple[tuple[int, ...], ...] = ()
    """Observed cycle types, when the classification relied on sampling."""

    factors: tuple[GaloisClass, ...] = ()
    """Classes of the irreducible factors, for reducible inputs."""


# PART/ constructibility


class Answer(enum.StrEnum):
    yes = "yes"
    no = "no"
    necessary_condition_fails = "necessary_condition_fails"
    necessary_condition_holds = "necessary_condition_holds"


class ConstructibilityVerdict(_BaseModel):

    answer: Answer

    reason: str
    """Human readable explanation."""

    degree: int | None = None
    """Degree of the minimal polynomial, when the verdict rests on it."""

    factorization: dict[int, int] | None = None
    """Prime factorization of n, for polygon and angle verdicts."""
