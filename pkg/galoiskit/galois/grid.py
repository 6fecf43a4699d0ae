"""
The Galois groups of x^5 + ax + b over a square of integer parameters.

Cells are independent, so the scan can be spread over worker processes;
rows are collected by index and the result does not depend on scheduling.
"""

from __future__ import annotations

import collections
import concurrent.futures
import logging
import typing

from frozendict import frozendict
from pydantic import BaseModel, ConfigDict

from galoiskit.domains import QQ
from galoiskit.galois.classify import ClassificationUnknown, galois_group
from galoiskit.poly import Polynomial, squarefree
from galoiskit.settings import settings

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterable

logger = logging.getLogger(__name__)

MAX_RANGE = 100

UNKNOWN = "Unknown"
REDUCIBLE = "Reducible"

PALETTE: frozendict[str, tuple[int, int, int]] = frozendict(
    {
        REDUCIBLE: (0, 0, 0),
        "C5": (0, 0, 255),
        "D5": (0, 128, 255),
        "F20": (0, 255, 128),
        "A5": (255, 128, 0),
        "S5": (230, 230, 230),
        UNKNOWN: (255, 0, 255),
    }
)


class QuinticMap(BaseModel):
    """Labels of the cells, one row per b from R down to -R, columns a from -R to R."""

    model_config = ConfigDict(frozen=True)

    range: int
    rows: tuple[tuple[str, ...], ...]

    def label_at(self, a: int, b: int) -> str:
        return self.rows[self.range - b][a + self.range]

    def histogram(self) -> dict[str, int]:
        counts = collections.Counter(label for row in self.rows for label in row)
        return {label: counts[label] for label in PALETTE if counts[label]}

    def unknown_cells(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for b in range(self.range, -self.range - 1, -1)
            for a in range(-self.range, self.range + 1)
            if self.label_at(a, b) == UNKNOWN
        ]

    def to_ppm(self) -> str:
        """Plain PPM (P3), one pixel per cell."""
        size = 2 * self.range + 1
        lines = ["P3", f"{size} {size}", "255"]
        for row in self.rows:
            lines.append(" ".join(f"{r} {g} {b}" for r, g, b in map(PALETTE.__getitem__, row)))
        return "\n".join(lines) + "\n"


def trinomial(a: int, b: int) -> Polynomial:
    return Polynomial([b, a, 0, 0, 0, 1], QQ)


def classify_cell(a: int, b: int, max_primes: int | None = None) -> str:
    """Group label of x^5 + ax + b; Unknown when sampling was inconclusive."""
    f = trinomial(a, b)
    if not squarefree(f):
        # a repeated root means a repeated factor
        return REDUCIBLE
    try:
        return galois_group(f, max_primes).label
    except ClassificationUnknown as e:
        logger.warning("x^5 + %dx + %d: %s", a, b, e)
        return UNKNOWN


def _classify_row(b: int, bound: int, max_primes: int) -> tuple[str, ...]:
    return tuple(classify_cell(a, b, max_primes) for a in range(-bound, bound + 1))


def quintic_map(
    bound: int | None = None,
    workers: int | None = None,
    progress: Callable[[int], None] | None = None,
) -> QuinticMap:
    """
    Classify x^5 + ax + b for -bound <= a, b <= bound.

    Parameters
    ----------
    bound : int
        The range R; defaults to ``settings.quintic_range``.
    workers : int
        Worker processes; defaults to ``settings.workers``. One means the
        scan runs in this process.
    progress : Callable[[int], None]
        Called with the number of finished rows.
    """
    if bound is None:
        bound = settings.quintic_range
    if workers is None:
        workers = settings.workers
    if not 0 <= bound <= MAX_RANGE:
        raise ValueError(f"The range must be between 0 and {MAX_RANGE}, got {bound}")

    bs = range(bound, -bound - 1, -1)
    max_primes = settings.max_primes
    logger.info("Classifying %d quintics with %d worker(s)", len(bs) ** 2, workers)

    rows: Iterable[tuple[str, ...]]
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            rows = _collect(
                executor.map(_classify_row, bs, [bound] * len(bs), [max_primes] * len(bs)),
                progress,
            )
    else:
        rows = _collect((_classify_row(b, bound, max_primes) for b in bs), progress)

    return QuinticMap(range=bound, rows=tuple(rows))


def _collect(
    rows: Iterable[tuple[str, ...]], progress: Callable[[int], None] | None
) -> list[tuple[str, ...]]:
    collected = []
    for row in rows:
        collected.append(row)
        if progress:
            progress(len(collected))
        if len(collected) % 10 == 0:
            logger.info("Finished %d rows", len(collected))
    return collected
