"""
Coefficient domains for :class:`galoiskit.poly.Polynomial`.

A domain describes how to do arithmetic on raw values (``int`` for the
integers and the modular rings, :class:`fractions.Fraction` for the rationals,
:class:`galoiskit.modp.QFElement` for quotient fields). Polynomials hold plain
values plus a reference to their domain.
"""

from __future__ import annotations

__all__ = [
    "QQ",
    "ZZ",
    "Domain",
    "IntegerRing",
    "ModularRing",
    "NotInvertibleError",
    "PrimeField",
    "RationalField",
]

import typing
from abc import ABC, abstractmethod
from fractions import Fraction

from galoiskit.utils import is_prime

if typing.TYPE_CHECKING:
    from collections.abc import Iterator
    from typing import Any


class NotInvertibleError(ArithmeticError):
    """Raised when inverting an element that is not a unit."""


class Domain[T](ABC):
    """
    A commutative ring with 1.

    Subclasses that are fields set :attr:`is_field` and implement :meth:`inv`.
    """

    is_field: typing.ClassVar[bool] = False

    @property
    @abstractmethod
    def zero(self) -> T: ...

    @property
    @abstractmethod
    def one(self) -> T: ...

    @abstractmethod
    def convert(self, value: Any) -> T:
        """Coerce an integer (or a value of this domain) into the domain."""

    @abstractmethod
    def add(self, a: T, b: T) -> T: ...

    @abstractmethod
    def neg(self, a: T) -> T: ...

    @abstractmethod
    def mul(self, a: T, b: T) -> T: ...

    def sub(self, a: T, b: T) -> T:
        return self.add(a, self.neg(b))

    def eq(self, a: T, b: T) -> bool:
        return a == b

    def is_zero(self, a: T) -> bool:
        return self.eq(a, self.zero)

    def is_one(self, a: T) -> bool:
        return self.eq(a, self.one)

    def inv(self, a: T) -> T:
        raise NotInvertibleError(f"{self} is not a field; cannot invert {a}")

    def div(self, a: T, b: T) -> T:
        return self.mul(a, self.inv(b))

    def is_unit(self, a: T) -> bool:
        try:
            self.inv(a)
        except (NotInvertibleError, ZeroDivisionError):
            return False
        return True

    def power(self, a: T, k: int) -> T:
        """Square-and-multiply exponentiation; negative exponents need a field."""
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def format(self, a: T) -> str:
        return str(a)

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def order(self) -> int | None:
        """Number of elements, or None for infinite domains."""
        return None

    def elements(self) -> Iterator[T]:
        raise TypeError(f"{self} is not finite")


class IntegerRing(Domain[int]):
    """The ring of integers."""

    zero = 0
    one = 1
    characteristic = 0

    def __repr__(self) -> str:
        return "ZZ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("ZZ")

    def convert(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def add(self, a: int, b: int) -> int:
        return a + b

    def neg(self, a: int) -> int:
        return -a

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def inv(self, a: int) -> int:
        if a in (1, -1):
            return a
        if a == 0:
            raise ZeroDivisionError("division by zero")
        raise NotInvertibleError(f"{a} is not a unit in ZZ")


class RationalField(Domain[Fraction]):
    """The field of rational numbers."""

    is_field = True
    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def convert(self, value: Any) -> Fraction:
        return Fraction(value)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b


class ModularRing(Domain[int]):
    """
    The ring Z/nZ with elements stored as integers in ``range(n)``.

    For composite `n` this is a ring that is not a field; it only inverts
    units. It reproduces the zero-divisor behaviour of Z_4 and Z_6.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"Modulus must be at least 2, got {n}")
        self.n = n

    def __repr__(self) -> str:
        return f"ModularRing({self.n})"

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and other.n == self.n  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self.n

    @property
    def order(self) -> int:
        return self.n

    def elements(self) -> Iterator[int]:
        yield from range(self.n)

    def convert(self, value: Any) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.n, value.denominator % self.n)
        return int(value) % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def neg(self, a: int) -> int:
        return -a % self.n

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.n

    def mul(self, a: int, b: int) -> int:
        return a * b % self.n

    def inv(self, a: int) -> int:
        if a % self.n == 0:
            raise ZeroDivisionError("division by zero")
        try:
            return pow(a, -1, self.n)
        except ValueError:
            raise NotInvertibleError(f"{a} is not a unit modulo {self.n}") from None

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        return pow(a, k, self.n)


class PrimeField(ModularRing):
    """The prime field F_p."""

    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"F_p requires a prime modulus, got {p}")
        super().__init__(p)

    def __repr__(self) -> str:
        return f"PrimeField({self.n})"

    @property
    def p(self) -> int:
        return self.n


ZZ = IntegerRing()
QQ = RationalField()
