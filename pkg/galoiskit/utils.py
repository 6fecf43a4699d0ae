from __future__ import annotations

import functools
import itertools
import math
import typing

from rapidfuzz.process import extractOne

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence
    from typing import Any

# deterministic for n < 3.3e24
_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def join_items(
    items: Sequence[Any],
    *,
    quote: bool = True,
    separator: str = ", ",
    conjunction: str = "and",
) -> str:
    """Join items with a separator."""
    if quote:
        items = [f"'{item}'" for item in items]
    match len(items):
        case 0:
            return "(none)"
        case 1:
            return items[0]
    items, last = items[:-1], items[-1]
    return separator.join(items) + f" {conjunction} {last}"


join_with_and = functools.partial(join_items, conjunction="and")
join_with_or = functools.partial(join_items, conjunction="or")


def get_suggestion(value: str, choices: Iterable[str]) -> str | None:
    """Return the closest match of `value` among `choices`, if any."""
    if match := extractOne(value, list(choices)):
        suggestion, _, _ = match
        return suggestion


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test; deterministic in the range we use."""
    if n < 2:
        return False
    for p in _MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in _MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iter_primes(start: int = 2) -> Iterator[int]:
    """Yield primes >= start in ascending order."""
    for n in itertools.count(max(start, 2)):
        if is_prime(n):
            yield n


def primes_up_to(bound: int) -> list[int]:
    """All primes p <= bound."""
    return list(itertools.takewhile(lambda p: p <= bound, iter_primes()))


def factorize(n: int) -> dict[int, int]:
    """Factor |n| by trial division. Returns an empty dict for 0 and +-1."""
    n = abs(n)
    factors: dict[int, int] = {}
    if n < 2:
        return factors

    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    """Positive divisors of |n|, ascending. ``divisors(0)`` is empty."""
    n = abs(n)
    if n == 0:
        return []
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0
