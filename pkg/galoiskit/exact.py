"""
Exact integers, rationals and dense linear algebra over the rationals.

Python integers already are arbitrary precision, and :class:`fractions.Fraction`
keeps rationals in lowest terms with a positive denominator, so equal values
are structurally equal. This module adds the few exact operations the rest of
the toolkit needs on top of them: squareness tests and the right null space of
a rational matrix.
"""

from __future__ import annotations

__all__ = [
    "BigInt",
    "QMatrix",
    "Rational",
    "is_perfect_square",
    "is_rational_square",
    "kernel",
    "rational_arith",
]

import math
import operator
import typing
from fractions import Fraction

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Sequence
    from typing import Literal

type BigInt = int
type Rational = Fraction

_OPERATORS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rational_arith(
    a: Rational | int, b: Rational | int, op: Literal["+", "-", "*", "/"] | str
) -> Rational:
    """
    Apply one of the four field operations to two rationals.

    Raises
    ------
    ZeroDivisionError
        When dividing by zero.
    ValueError
        When the operator is not recognized.
    """
    try:
        func = _OPERATORS[op]
    except KeyError:
        raise ValueError(f"Unsupported operator: {op!r}") from None
    return Fraction(func(Fraction(a), Fraction(b)))


def is_perfect_square(n: BigInt) -> BigInt | None:
    """Integer square root of `n` when `n` is a perfect square, else None."""
    if n < 0:
        return None
    root = math.isqrt(n)
    if root * root == n:
        return root
    return None


def is_rational_square(q: Rational | int) -> Rational | None:
    """
    Square root of `q` when it is the square of a rational, else None.

    In lowest terms p/q is a square exactly when p and q both are.
    """
    q = Fraction(q)
    num = is_perfect_square(q.numerator)
    den = is_perfect_square(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


class QMatrix:
    """An immutable dense matrix of rationals stored row-major."""

    __slots__ = ("cols", "entries", "rows")

    rows: int
    cols: int
    entries: tuple[Rational, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[Rational | int]):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name: str, value: typing.Any) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational | int]]) -> QMatrix:
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError("All rows must have the same length")
        return cls(len(rows), n_cols, (e for row in rows for e in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Rational | int]]) -> QMatrix:
        n_rows = len(columns[0]) if columns else 0
        return cls.from_rows([[col[i] for col in columns] for i in range(n_rows)])

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, index: tuple[int, int]) -> Rational:
        i, j = index
        return self.entries[i * self.cols + j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}, {self.cols}, {[str(e) for e in self.entries]})"

    def row(self, i: int) -> tuple[Rational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def mul_vector(self, vector: Sequence[Rational | int]) -> tuple[Rational, ...]:
        if len(vector) != self.cols:
            raise ValueError("Vector length does not match the column count")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector, strict=True)), Fraction(0))
            for i in range(self.rows)
        )


def kernel(m: QMatrix) -> list[tuple[Rational, ...]]:
    """
    Basis of the right null space of `m`.

    Gaussian elimination to reduced row echelon form, pivoting on the first
    nonzero entry of each column. One basis vector per free column, with a 1
    in that column. The list is empty iff `m` has full column rank.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivot_cols: list[int] = []

    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]

        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(m.rows):
            if i != r and (factor := rows[i][c]) != 0:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r], strict=True)]

        pivot_cols.append(c)
        r += 1
        if r == m.rows:
            break

    basis = []
    for free in (c for c in range(m.cols) if c not in pivot_cols):
        vector = [Fraction(0)] * m.cols
        vector[free] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            vector[c] = -rows[i][free]
        basis.append(tuple(vector))
    return basis
