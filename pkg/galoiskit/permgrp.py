"""
Permutation groups on at most 8 points.

Points are numbered from 1. Products are composed right to left, so
``a * b`` applies ``b`` first; with this convention ``(1,2,3) = (1,3)(1,2)``.
Groups are small enough to be enumerated in full, which is what every
operation here does.
"""

from __future__ import annotations

__all__ = [
    "GroupTooLarge",
    "Lattice",
    "PermGroup",
    "Permutation",
    "alternating_group",
    "apply_word",
    "commutator_subgroup",
    "compose",
    "cyclic_group",
    "derived_series",
    "dihedral_group",
    "format_cycles",
    "generate",
    "is_normal",
    "is_simple",
    "is_solvable",
    "lattice",
    "named_group",
    "normal_closure",
    "parse_cycles",
    "parse_word",
    "subgroups",
    "symmetric_group",
]

import collections
import itertools
import logging
import math
import re
import typing

from galoiskit.utils import get_suggestion, join_with_or

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence
    from typing import Any

logger = logging.getLogger(__name__)

MAX_DEGREE = 8
MAX_LATTICE_ORDER = 60
MAX_SERIES_ORDER = 120


class GroupTooLarge(ValueError):
    """Raised when an enumeration is asked for a group above its size bound."""


class Permutation:
    """
    A bijection of {1, ..., n}; ``images[i - 1]`` is the image of point i.
    """

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        if len(images) > MAX_DEGREE:
            raise GroupTooLarge(f"Permutations are limited to {MAX_DEGREE} points")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Product of the given cycles, composed right to left."""
        result = cls.identity(degree)
        for cycle in cycles:
            images = list(range(1, degree + 1))
            for a, b in itertools.pairwise([*cycle, cycle[0]]):
                images[a - 1] = b
            result = result * cls(images)
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k) % self.order):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"

    def __str__(self) -> str:
        return format_cycles(self)

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for i, image in enumerate(self.images, 1):
            images[image - 1] = i
        return Permutation(images)

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its smallest point."""
        seen: set[int] = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    @property
    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in descending order."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    @property
    def order(self) -> int:
        return math.lcm(*self.cycle_type)

    @property
    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_even(self) -> bool:
        return self.sign == 1


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The product ab: apply `b` first, then `a`."""
    if a.degree != b.degree:
        raise ValueError(f"Cannot compose permutations of degree {a.degree} and {b.degree}")
    return Permutation(a.images[j - 1] for j in b.images)


# PART/ cycle notation

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")
_IDENTITY_NAMES = frozenset({"", "id", "e", "()"})


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """
    Parse cycle notation such as ``(1,2)(1,2,4,3)``.

    The cycles need not be disjoint; they are composed right to left.
    Points may be separated by commas or spaces. The degree defaults to the
    largest point mentioned.

    Raises
    ------
    ValueError
        On malformed text, a point repeated within a cycle, or a point
        outside 1..degree.
    """
    text = text.strip()
    if text.lower() in _IDENTITY_NAMES:
        return Permutation.identity(degree or 1)

    cycles: list[tuple[int, ...]] = []
    pos = 0
    for match in _CYCLE_PATTERN.finditer(text):
        if text[pos : match.start()].strip():
            raise ValueError(f"Unexpected text at position {pos}: {text[pos:match.start()]!r}")
        pos = match.end()

        body = match.group(1).strip()
        if not body:
            continue
        try:
            points = tuple(int(p) for p in re.split(r"[,\s]+", body))
        except ValueError:
            raise ValueError(f"Malformed cycle {match.group(0)!r}") from None
        if len(set(points)) != len(points):
            raise ValueError(f"Repeated point in cycle {match.group(0)!r}")
        if min(points) < 1:
            raise ValueError(f"Points are numbered from 1, got {match.group(0)!r}")
        cycles.append(points)

    if text[pos:].strip():
        raise ValueError(f"Unexpected text at position {pos}: {text[pos:]!r}")

    largest = max((max(c) for c in cycles), default=1)
    if degree is None:
        degree = largest
    elif largest > degree:
        raise ValueError(f"Point {largest} exceeds the degree {degree}")
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    """Canonical disjoint cycle notation; ``id`` for the identity."""
    cycles = p.cycles()
    if not cycles:
        return "id"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


# PART/ words in generators

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")
_WORD_PATTERN = re.compile(r"(?P<name>[^\W\d_])(?:\^(?P<exp>-?\d+)|(?P<sup>[⁻⁰¹²³⁴⁵⁶⁷⁸⁹]+))?")


def parse_word(text: str) -> list[tuple[str, int]]:
    """
    Split a word such as ``στσ²τσ⁻²τσ`` or ``s t s^2`` into letters with
    exponents. Generator names are single letters.
    """
    letters = []
    pos = 0
    for match in _WORD_PATTERN.finditer(text):
        if text[pos : match.start()].strip():
            raise ValueError(f"Malformed word {text!r} at position {pos}")
        pos = match.end()
        if exp := match.group("exp"):
            k = int(exp)
        elif sup := match.group("sup"):
            k = int(sup.translate(_SUPERSCRIPTS))
        else:
            k = 1
        letters.append((match.group("name"), k))
    if text[pos:].strip():
        raise ValueError(f"Malformed word {text!r} at position {pos}")
    return letters


def apply_word(
    start: Permutation,
    word: str | Sequence[tuple[str, int]],
    generators: Mapping[str, Permutation],
) -> Permutation:
    """
    Follow a path in the Cayley graph from `start`.

    The word is read left to right and each letter acts after everything
    before it, so the result is ``g_k * ... * g_1 * start`` in this module's
    right-to-left notation. With ``s = (1,2,3,4,5)`` and ``t = (1,2)(3,4)``,
    the path ``s t s^2 t s^-2 t s`` from ``(1,2,3,4,5)`` ends at
    ``(2,5)(3,4)``.
    """
    if isinstance(word, str):
        word = parse_word(word)
    result = start
    for name, k in word:
        if name not in generators:
            raise ValueError(
                f"Unknown generator {name!r}; expected {join_with_or(sorted(generators))}"
            )
        result = generators[name] ** k * result
    return result


# PART/ groups


class PermGroup:
    """A permutation group, stored with its generators and all its elements."""

    __slots__ = ("degree", "elements", "generators")

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: frozenset[Permutation],
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators)) or "id"
        return f"PermGroup(<{gens}>, order={self.order})"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.elements))

    def __contains__(self, p: object) -> bool:
        return p in self.elements

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PermGroup):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __le__(self, other: PermGroup) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: PermGroup) -> bool:
        return self.elements < other.elements

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a, b in itertools.combinations(self.generators, 2))

    def is_transitive(self) -> bool:
        orbit = {1}
        queue = collections.deque([1])
        while queue:
            point = queue.popleft()
            for g in self.generators:
                if (image := g(point)) not in orbit:
                    orbit.add(image)
                    queue.append(image)
        return len(orbit) == self.degree

    def cycle_types(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p.cycle_type for p in self.elements)

    def format(self) -> str:
        if self.order == 1:
            return "{id}"
        return "<" + ", ".join(map(str, self.generators)) + ">"


def generate(gens: Iterable[Permutation], degree: int | None = None) -> PermGroup:
    """
    The group generated by `gens`, by breadth-first closure under right
    multiplication by the generators.
    """
    gens = [g for g in gens]
    if degree is None:
        degree = gens[0].degree if gens else 1
    if any(g.degree != degree for g in gens):
        raise ValueError("All generators must have the same degree")

    identity = Permutation.identity(degree)
    gens = [g for g in dict.fromkeys(gens) if g != identity]
    elements = {identity}
    queue = collections.deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            if (y := x * g) not in elements:
                elements.add(y)
                queue.append(y)

    return PermGroup(degree, gens, frozenset(elements))


def _require_order(G: PermGroup, limit: int, what: str) -> None:
    if G.order > limit:
        raise GroupTooLarge(f"{what} is limited to groups of order {limit}, got {G.order}")


# PART/ subgroups


def subgroups(G: PermGroup) -> list[PermGroup]:
    """
    Every subgroup of `G`, ordered by size.

    Starts from the cyclic subgroups and adds joins of pairs until nothing
    new appears; every subgroup is a join of cyclic ones.
    """
    _require_order(G, MAX_LATTICE_ORDER, "Subgroup enumeration")

    found: dict[frozenset[Permutation], PermGroup] = {}
    for g in G.elements:
        H = generate([g], G.degree)
        found.setdefault(H.elements, H)

    pending = list(found.values())
    while pending:
        fresh = []
        current = list(found.values())
        for H in pending:
            for K in current:
                if H <= K or K <= H:
                    continue
                J = generate([*H.generators, *K.generators], G.degree)
                if J.elements not in found:
                    found[J.elements] = J
                    fresh.append(J)
        logger.debug("Subgroup search: %d new joins, %d subgroups", len(fresh), len(found))
        pending = fresh

    return sorted(found.values(), key=lambda H: (H.order, sorted(H.elements)))


class Lattice:
    """Subgroups of a group with the covering inclusions between them."""

    def __init__(self, subgroups: list[PermGroup], edges: list[tuple[int, int]]):
        self.subgroups = subgroups
        self.edges = edges

    def to_dot(self, name: str = "lattice") -> str:
        lines = [f"graph {name} {{"]
        for i, H in enumerate(self.subgroups):
            lines.append(f'  "H{i}" [label="H{i}: order {H.order}, {H.format()}"];')
        for i, j in self.edges:
            lines.append(f'  "H{i}" -- "H{j}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def lattice(G: PermGroup) -> Lattice:
    """
    The subgroup lattice: an edge ``(i, j)`` when subgroup i is a maximal
    proper subgroup of subgroup j.
    """
    subs = subgroups(G)
    edges = []
    for j, K in enumerate(subs):
        below = [i for i, H in enumerate(subs) if H < K]
        for i in below:
            if not any(subs[i] < subs[m] for m in below if m != i):
                edges.append((i, j))
    return Lattice(subs, edges)


# PART/ normality and solubility


def is_normal(H: PermGroup, G: PermGroup) -> bool:
    """Whether `H` is a normal subgroup of `G`; generators suffice for the check."""
    if not H <= G:
        return False
    return all(g * h * g.inverse() in H for g in G.generators for h in H.generators)


def normal_closure(gens: Iterable[Permutation], G: PermGroup) -> PermGroup:
    """The smallest normal subgroup of `G` containing `gens`."""
    conjugates = {g * x * g.inverse() for x in gens for g in G.elements}
    return generate(sorted(conjugates), G.degree)


def commutator_subgroup(G: PermGroup) -> PermGroup:
    """[G, G], generated by every commutator a^-1 b^-1 a b."""
    commutators = {
        a.inverse() * b.inverse() * a * b
        for a, b in itertools.combinations(sorted(G.elements), 2)
    }
    return generate(sorted(commutators), G.degree)


def derived_series(G: PermGroup) -> list[PermGroup]:
    """G, [G, G], [[G, G], [G, G]], ... up to the first repeat."""
    _require_order(G, MAX_SERIES_ORDER, "The derived series")
    series = [G]
    while True:
        D = commutator_subgroup(series[-1])
        if D == series[-1]:
            return series
        series.append(D)


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_simple(G: PermGroup) -> bool:
    """Whether the only normal subgroups of `G` are {id} and `G`."""
    _require_order(G, MAX_LATTICE_ORDER, "The simplicity test")
    if G.order == 1:
        return False
    return all(
        normal_closure([x], G).order == G.order
        for x in G.elements
        if not x.is_identity()
    )


# PART/ named groups


def symmetric_group(n: int) -> PermGroup:
    """S_n = <(1,2), (1,2,...,n)>."""
    if n <= 1:
        return generate([], max(n, 1))
    return generate(
        [Permutation.from_cycles([(1, 2)], n), Permutation.from_cycles([range(1, n + 1)], n)]
    )


def alternating_group(n: int) -> PermGroup:
    """A_n, generated by the 3-cycles (1,2,k)."""
    if n <= 2:
        return generate([], max(n, 1))
    return generate([Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)])


def cyclic_group(n: int) -> PermGroup:
    return generate([Permutation.from_cycles([range(1, n + 1)], n)] if n > 1 else [], n)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the regular n-gon with vertices 1..n, of order 2n."""
    if n < 3:
        raise ValueError("Dihedral groups act on at least 3 points")
    rotation = Permutation.from_cycles([range(1, n + 1)], n)
    reflection = Permutation([1, *range(n, 1, -1)])
    return generate([rotation, reflection])


def klein_four_group() -> PermGroup:
    return generate([parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")])


def frobenius_group_20() -> PermGroup:
    """x -> ax + b on the integers mod 5, with point 5 standing for 0."""
    return generate([parse_cycles("(1,2,3,4,5)"), parse_cycles("(1,2,4,3)", 5)])


_FAMILIES = {
    "s": symmetric_group,
    "a": alternating_group,
    "c": cyclic_group,
    "d": dihedral_group,
}
_SPECIAL = {
    "v4": klein_four_group,
    "f20": frobenius_group_20,
}
_NAME_PATTERN = re.compile(r"(?P<family>[a-z])_?(?P<n>\d+)")


def named_group(name: str) -> PermGroup:
    """
    A group by name: ``s_n``, ``a_n``, ``c_n``, ``d_n`` (the underscore is
    optional), ``v4`` or ``f20``, on at most 8 points.
    """
    key = name.strip().lower()
    if key in _SPECIAL:
        return _SPECIAL[key]()

    if (match := _NAME_PATTERN.fullmatch(key)) and match.group("family") in _FAMILIES:
        n = int(match.group("n"))
        if not 1 <= n <= MAX_DEGREE:
            raise GroupTooLarge(f"Groups are limited to {MAX_DEGREE} points, got {name!r}")
        return _FAMILIES[match.group("family")](n)

    known = ["s3", "s4", "s5", "a4", "a5", "d4", "d5", "c5", "v4", "f20"]
    message = f"Unknown group {name!r}"
    if suggestion := get_suggestion(key, known):
        message += f"; did you mean {suggestion!r}?"
    raise ValueError(message)
