from __future__ import annotations

import contextlib
import logging
import sys
import typing

import click

from galoiskit.domains import PrimeField
from galoiskit.parsers import PolySyntaxError, parse_poly
from galoiskit.permgrp import parse_cycles

if typing.TYPE_CHECKING:
    from collections.abc import Iterator
    from pathlib import Path
    from typing import Any, TextIO

    from galoiskit.permgrp import Permutation
    from galoiskit.poly import Polynomial

logger = logging.getLogger(__name__)


class PolynomialType(click.ParamType):
    """A polynomial over QQ written in `variable`, such as ``x^5 - 4x + 2``."""

    name = "polynomial"

    def __init__(self, variable: str = "x"):
        self.variable = variable

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> Polynomial:
        if not isinstance(value, str):
            return value
        try:
            return parse_poly(value, self.variable)
        except PolySyntaxError as e:
            self.fail(str(e), param, ctx)


class PermutationType(click.ParamType):
    """A permutation in cycle notation, such as ``(1,2)(3,4)``."""

    name = "cycles"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> Permutation:
        if not isinstance(value, str):
            return value
        try:
            return parse_cycles(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


def prime_field(
    ctx: click.Context, param: click.Parameter, value: int | None
) -> PrimeField | None:
    """Option callback turning ``--mod p`` into the field F_p."""
    if value is None:
        return None
    try:
        return PrimeField(value)
    except ValueError as e:
        raise click.BadParameter(str(e), ctx, param) from None


@contextlib.contextmanager
def exit_on_domain_error() -> Iterator[None]:
    """Log mathematical errors and exit with status 1."""
    try:
        yield
    except click.exceptions.Exit:
        raise
    except (ValueError, ArithmeticError, RuntimeError) as e:
        logger.error("%s", e)
        logger.debug("Error details:", exc_info=True)
        sys.exit(1)


def open_output(path: Path | None) -> contextlib.AbstractContextManager[TextIO]:
    if path:
        return path.open("w")
    return contextlib.nullcontext(sys.stdout)  # prevent __exit__ call
