"""
Galois groups of rational polynomials of degree at most 5.

Quadratics and cubics follow closed-form rules: rational roots and whether
the discriminant is a square. Quartics and quintics are placed among the
transitive subgroups of S4 and S5 using the discriminant (is the group inside
the alternating group?) and the cycle types seen in factorizations modulo
admissible primes.
"""

from __future__ import annotations

import logging
import typing
from fractions import Fraction

from frozendict import frozendict

from galoiskit.domains import QQ
from galoiskit.exact import is_rational_square
from galoiskit.galois.sampling import iter_cycle_types
from galoiskit.irr import factor_q, is_irreducible_q, rational_roots
from galoiskit.poly import cyclotomic_p, discriminant, primitive_part
from galoiskit.settings import settings
from galoiskit.types import GaloisClass, Verdict
from galoiskit.utils import is_prime

if typing.TYPE_CHECKING:
    from collections.abc import Iterable

    from galoiskit.poly import Polynomial

    type CycleType = tuple[int, ...]

logger = logging.getLogger(__name__)

MAX_DEGREE = 5

TRANSITIVE_GROUPS: frozendict[int, frozendict[str, tuple[bool, frozenset[CycleType]]]] = (
    frozendict(
        {
            3: frozendict(
                {
                    "C3": (True, frozenset({(3,)})),
                    "S3": (False, frozenset({(2, 1), (3,)})),
                }
            ),
            4: frozendict(
                {
                    "V4": (True, frozenset({(2, 2)})),
                    "A4": (True, frozenset({(2, 2), (3, 1)})),
                    "C4": (False, frozenset({(2, 2), (4,)})),
                    "D4": (False, frozenset({(2, 1, 1), (2, 2), (4,)})),
                    "S4": (False, frozenset({(2, 1, 1), (2, 2), (3, 1), (4,)})),
                }
            ),
            5: frozendict(
                {
                    "C5": (True, frozenset({(5,)})),
                    "D5": (True, frozenset({(2, 2, 1), (5,)})),
                    "A5": (True, frozenset({(2, 2, 1), (3, 1, 1), (5,)})),
                    "F20": (False, frozenset({(2, 2, 1), (4, 1), (5,)})),
                    "S5": (
                        False,
                        frozenset({(2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)}),
                    ),
                }
            ),
        }
    )
)
"""
Transitive groups by degree: whether they sit inside the alternating group,
and the cycle types of their non-identity elements.
"""

GROUP_ORDERS: frozendict[str, int] = frozendict(
    {
        "Trivial": 1,
        "C2": 2,
        "C3": 3,
        "S3": 6,
        "C4": 4,
        "V4": 4,
        "D4": 8,
        "A4": 12,
        "S4": 24,
        "C5": 5,
        "D5": 10,
        "F20": 20,
        "A5": 60,
        "S5": 120,
    }
)

INSOLUBLE_GROUPS = frozenset({"A5", "S5"})


class ClassificationUnknown(RuntimeError):
    """The sampled cycle types did not single out one group."""

    def __init__(self, candidates: Iterable[str], message: str | None = None):
        self.candidates = tuple(candidates)
        super().__init__(
            message or f"Cycle types do not distinguish between {', '.join(self.candidates)}"
        )


def _make_class(
    label: str, degree: int, disc: Fraction | None, **kwargs: typing.Any
) -> GaloisClass:
    return GaloisClass(
        label=label,
        order=kwargs.pop("order", None) or GROUP_ORDERS[label],
        solvable=kwargs.pop("solvable", label not in INSOLUBLE_GROUPS),
        degree=degree,
        discriminant=disc,
        disc_square=None if disc is None else is_rational_square(disc) is not None,
        **kwargs,
    )


def _prepare(f: Polynomial, degree: int | None = None) -> tuple[Polynomial, Fraction]:
    f = f.with_domain(QQ)
    if f.is_constant():
        raise ValueError("The Galois group of a constant polynomial is undefined")
    n = len(f.coeffs) - 1
    if degree is not None and n != degree:
        raise ValueError(f"Expected a polynomial of degree {degree}, got {f}")
    disc = Fraction(discriminant(f))
    if disc == 0:
        raise ValueError(f"{f} has a repeated root")
    return f, disc


# PART/ closed-form rules


def galois_group_quadratic(f: Polynomial) -> GaloisClass:
    """Trivial when the roots are rational, C2 otherwise."""
    f, disc = _prepare(f, 2)
    label = "Trivial" if is_rational_square(disc) is not None else "C2"
    return _make_class(label, 2, disc)


def galois_group_cubic(f: Polynomial) -> GaloisClass:
    """
    Galois group of a squarefree cubic.

    Three rational roots give the trivial group and a single rational root
    leaves a quadratic factor, so C2. An irreducible cubic has group C3 when
    its discriminant is a rational square and S3 otherwise.
    """
    f, disc = _prepare(f, 3)
    match len(rational_roots(f)):
        case 3:
            return _make_class("Trivial", 3, disc)
        case 1:
            return _make_class("C2", 3, disc)
    label = "C3" if is_rational_square(disc) is not None else "S3"
    return _make_class(label, 3, disc)


# PART/ cycle type classification


def candidate_groups(
    degree: int, disc_square: bool, observed: Iterable[CycleType]
) -> list[str]:
    """Transitive groups of the right parity that contain every observed type."""
    observed = {t for t in observed if any(part > 1 for part in t)}
    return [
        label
        for label, (even, types) in TRANSITIVE_GROUPS[degree].items()
        if even == disc_square and observed <= types
    ]


def classify_cycle_types(
    degree: int, disc_square: bool, observed: Iterable[CycleType]
) -> str:
    """
    Name the group from the final set of observed cycle types.

    A single remaining candidate wins. Otherwise the candidate whose
    non-identity cycle types are exactly the observed ones is accepted.

    Raises
    ------
    ClassificationUnknown
        When neither rule applies.
    """
    observed = {t for t in observed if any(part > 1 for part in t)}
    candidates = candidate_groups(degree, disc_square, observed)
    if len(candidates) == 1:
        return candidates[0]
    for label in candidates:
        _, types = TRANSITIVE_GROUPS[degree][label]
        if types == observed:
            return label
    raise ClassificationUnknown(candidates)


def _classify_irreducible(
    f: Polynomial, disc: Fraction, max_primes: int | None = None
) -> GaloisClass:
    n = len(f.coeffs) - 1
    disc_square = is_rational_square(disc) is not None
    if max_primes is None:
        max_primes = settings.max_primes

    observed: set[CycleType] = set()
    for count, sample in enumerate(iter_cycle_types(f), 1):
        if any(part > 1 for part in sample.partition):
            observed.add(sample.partition)
        if len(candidate_groups(n, disc_square, observed)) == 1:
            logger.debug("%s: decided after %d primes (p=%d)", f, count, sample.p)
            break
        if count >= max_primes:
            break

    label = classify_cycle_types(n, disc_square, observed)
    return _make_class(label, n, disc, cycle_types=tuple(sorted(observed, reverse=True)))


# PART/ reducible polynomials


def _reducible_order(classes: list[GaloisClass]) -> int:
    """Degree of the compositum of the splitting fields of the factors."""
    nonlinear = [c for c in classes if c.degree > 1]
    match nonlinear:
        case []:
            return 1
        case [single]:
            return single.order
        case [first, second] if first.degree == second.degree == 2:
            product = Fraction(first.discriminant) * Fraction(second.discriminant)
            return 2 if is_rational_square(product) is not None else 4
        case [first, second] if {first.degree, second.degree} == {2, 3}:
            quadratic, cubic = sorted(nonlinear, key=lambda c: c.degree)
            if cubic.label == "C3":
                return 6
            product = Fraction(quadratic.discriminant) * Fraction(cubic.discriminant)
            return 6 if is_rational_square(product) is not None else 12
    raise ValueError(f"Unsupported factor shape: {[c.degree for c in nonlinear]}")


def _classify_reducible(f: Polynomial, disc: Fraction) -> GaloisClass:
    _, factors = factor_q(f)
    classes = [galois_group(g) for g, _ in factors]
    return GaloisClass(
        label="Reducible",
        order=_reducible_order(classes),
        solvable=all(c.solvable for c in classes),
        degree=len(f.coeffs) - 1,
        discriminant=disc,
        disc_square=is_rational_square(disc) is not None,
        factors=tuple(classes),
    )


# PART/ entry points


def cyclotomic_prime(f: Polynomial) -> int | None:
    """p when `f` is a rational multiple of x^(p-1) + ... + x + 1 for an odd prime p."""
    f = f.with_domain(QQ)
    p = len(f.coeffs)
    if p < 3 or not is_prime(p):
        return None
    if primitive_part(f) == cyclotomic_p(p):
        return p
    return None


def galois_group(f: Polynomial, max_primes: int | None = None) -> GaloisClass:
    """
    Galois group of a squarefree rational polynomial of degree at most 5,
    or of a cyclotomic x^(p-1) + ... + 1 of any degree.

    Raises
    ------
    ValueError
        For constant polynomials, repeated roots or unsupported degrees.
    ClassificationUnknown
        When sampling `max_primes` primes did not identify the group.
    """
    f = f.with_domain(QQ)
    if f.is_constant():
        raise ValueError("The Galois group of a constant polynomial is undefined")
    n = len(f.coeffs) - 1

    if p := cyclotomic_prime(f):
        disc = Fraction(discriminant(f)) if n <= MAX_DEGREE else None
        return _make_class(f"C{p - 1}", n, disc, order=p - 1, solvable=True)

    if n > MAX_DEGREE:
        raise ValueError(f"Classification is limited to degree {MAX_DEGREE}, got {n}")

    match n:
        case 1:
            return _make_class("Trivial", 1, None)
        case 2:
            return galois_group_quadratic(f)
        case 3:
            return galois_group_cubic(f)

    f, disc = _prepare(f)
    cert = is_irreducible_q(f)
    if cert.verdict == Verdict.reducible:
        return _classify_reducible(f, disc)
    return _classify_irreducible(f, disc, max_primes)


def splitting_degree(f: Polynomial) -> int:
    """[E:QQ] for the splitting field E of `f`, which is the order of its group."""
    return galois_group(f).order


def is_solvable_by_radicals(f: Polynomial) -> bool:
    """Whether the roots of `f` can be written with radicals; its group is soluble."""
    return galois_group(f).solvable
