from __future__ import annotations

import logging
import typing
from fractions import Fraction
from pathlib import Path

import click
import cloup
import colorlog
from pydantic import ValidationError

from galoiskit.console.outputs import get_output_builder
from galoiskit.console.utils import (
    PermutationType,
    PolynomialType,
    exit_on_domain_error,
    open_output,
    prime_field,
)
from galoiskit.settings import settings
from galoiskit.version import __version__

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from galoiskit.domains import PrimeField
    from galoiskit.permgrp import Permutation
    from galoiskit.poly import Polynomial

logger = logging.getLogger(__name__)

POLYNOMIAL = PolynomialType()


@cloup.group(
    context_settings={
        "help_option_names": ["-h", "--help"],
    }
)
@cloup.option_group(
    "Output options",
    cloup.option(
        "--color",
        type=cloup.BOOL,
        help="Colorize the output. [default: auto]",
    ),
)
@cloup.option_group(
    "Galois group options",
    cloup.option(
        "--max-primes",
        type=int,
        help="Admissible primes sampled before giving up on a classification. [default: 200]",
    ),
)
@cloup.option_group(
    "Logging options",
    cloup.option(
        "-v",
        "--verbose",
        count=True,
        help="Print more information.",
    ),
)
@cloup.version_option(__version__)
@click.pass_context
def main(ctx: click.Context, color: bool | None, max_primes: int | None, verbose: int):
    """
    Exact computations in Galois theory.

    Polynomials are written in the variable x, e.g. "x^5 - 4x + 2". Every
    command prints one JSON object per result.

    Examples:

    \b
      # Certify irreducibility over QQ
      galoiskit irr "x^5 - 4x + 2"

    \b
      # Classify a Galois group
      galoiskit group "x^5 - 2"

    \b
      # Draw the quintic map
      galoiskit quintic-map --range 40 --out map.ppm
    """
    # setup logging
    setup_logging(verbose)

    # update and validate settings
    update_settings(color=color, max_primes=max_primes)
    logger.debug("Current settings: %s", settings.model_dump_json(indent=2))

    ctx.color = settings.color


def setup_logging(verbose_level: int):
    """
    Setup logging
    We separate the configuration of the galoiskit logger from the other loggers.
    """
    # galoiskit loggers
    galoiskit_logger = colorlog.getLogger("galoiskit")
    galoiskit_logger.propagate = False

    match verbose_level:
        case 0:
            galoiskit_logger.setLevel(colorlog.WARNING)
        case 1:
            galoiskit_logger.setLevel(colorlog.INFO)
        case _:
            galoiskit_logger.setLevel(colorlog.DEBUG)

    handler = colorlog.StreamHandler()
    handler.setFormatter(
        colorlog.ColoredFormatter("%(log_color)s%(levelname)7s |%(reset)s %(message)s")
    )
    galoiskit_logger.addHandler(handler)

    # other loggers
    # only show logs when verbose level >= 3
    if verbose_level >= 3:
        logger = colorlog.getLogger()
        logger.setLevel(colorlog.DEBUG)
        logger.addHandler(handler)


def update_settings(**kwargs):
    """Update the settings, if the option is provided by the user."""
    update_args = {}
    for key in ("color", "max_primes", "quintic_range", "workers"):
        if (value := kwargs.get(key)) is not None:
            update_args[key] = value

    # inplace update, keeping values set by earlier calls
    # https://docs.pydantic.dev/latest/concepts/pydantic_settings/#in-place-reloading
    try:
        settings.__init__(**(settings.model_dump() | update_args))
    except ValidationError as e:
        for err in e.errors():
            field = ".".join(map(str, err["loc"]))
            msg = err["msg"]
            raise click.UsageError(f"{field}: {msg}") from None


def emit(*results: typing.Any, output_format: str = "json", out: Path | None = None):
    """Write results to `out`, or to stdout."""
    builder = get_output_builder(output_format)
    for result in results:
        builder.update(result)
    with open_output(out) as stream:
        builder.dump(stream)


mod_option = cloup.option(
    "--mod",
    "field",
    type=int,
    callback=prime_field,
    metavar="P",
    help="Work over the prime field F_P instead of the rationals.",
)


# PART/ polynomials


@main.command()
@cloup.argument("poly", type=POLYNOMIAL, help="The polynomial to test.")
@mod_option
def irr(poly: Polynomial, field: PrimeField | None):
    """Decide irreducibility, with a certificate."""
    from galoiskit.irr import is_irreducible_q
    from galoiskit.modp import factor_over_fp, is_irreducible_fp
    from galoiskit.types import serialize_polynomial

    with exit_on_domain_error():
        if field is None:
            emit(is_irreducible_q(poly))
            return

        f = poly.with_domain(field)
        if f.is_constant():
            raise ValueError(f"{f.format()} is constant over {field}")
        result: dict[str, typing.Any] = {
            "poly": serialize_polynomial(f),
            "field": str(field),
        }
        if is_irreducible_fp(f):
            result["verdict"] = "irreducible"
        else:
            result["verdict"] = "reducible"
            result["factors"] = [
                {"factor": serialize_polynomial(g), "multiplicity": m}
                for g, m in factor_over_fp(f)
            ]
        emit(result)


@main.command()
@cloup.argument("f", type=POLYNOMIAL)
@cloup.argument("g", type=POLYNOMIAL)
@mod_option
def gcd(f: Polynomial, g: Polynomial, field: PrimeField | None):
    """Monic gcd with Bezout coefficients s, t such that s*f + t*g = gcd."""
    from galoiskit.poly import gcd_bezout
    from galoiskit.types import serialize_polynomial

    with exit_on_domain_error():
        if field is not None:
            f, g = f.with_domain(field), g.with_domain(field)
        d, s, t = gcd_bezout(f, g)
        emit(
            {
                "gcd": d.format(),
                "gcd_coeffs": serialize_polynomial(d)["coeffs"],
                "s": serialize_polynomial(s),
                "t": serialize_polynomial(t),
            }
        )


# PART/ Galois groups


@main.command()
@cloup.argument("poly", type=POLYNOMIAL, help="Polynomial of degree at most 5.")
def group(poly: Polynomial):
    """Galois group of a rational polynomial."""
    from galoiskit.galois import galois_group

    with exit_on_domain_error():
        emit({"poly": poly.format(), **galois_group(poly).model_dump(mode="json")})


@main.command()
@cloup.argument("poly", type=POLYNOMIAL, help="Polynomial of degree at most 5.")
def solvable(poly: Polynomial):
    """Decide whether the roots can be expressed by radicals."""
    from galoiskit.galois import galois_group

    with exit_on_domain_error():
        cls = galois_group(poly)
        emit(
            {
                "poly": poly.format(),
                "solvable": cls.solvable,
                "group": cls.label,
                "order": cls.order,
            }
        )


@main.command("quintic-map")
@cloup.option_group(
    "Grid options",
    cloup.option(
        "--range",
        "bound",
        type=int,
        help="Scan -R <= a, b <= R. [default: 40]",
    ),
    cloup.option(
        "--workers",
        type=int,
        help="Number of worker processes. [default: 1]",
    ),
)
@cloup.option(
    "-o",
    "--out",
    type=cloup.file_path(writable=True),
    help="Write the map as a plain PPM image to this file.",
)
def quintic_map(bound: int | None, workers: int | None, out: Path | None):
    """Classify x^5 + ax + b over a square of integer parameters."""
    from galoiskit.galois import quintic_map

    update_settings(quintic_range=bound, workers=workers)
    with exit_on_domain_error():
        result = quintic_map()

        if out:
            emit(result, output_format="ppm", out=out)
            logger.info("Map written to %s", out)

        emit(
            {
                "range": result.range,
                "cells": (2 * result.range + 1) ** 2,
                "histogram": result.histogram(),
                "unknown": [list(cell) for cell in result.unknown_cells()],
            }
        )


# PART/ fields


@main.command()
@cloup.argument("element", help="Element written in the generators a (and b).")
@cloup.option(
    "--modulus",
    type=POLYNOMIAL,
    required=True,
    help="Minimal polynomial of the generator a.",
)
@cloup.option(
    "--adjoin",
    type=POLYNOMIAL,
    help="Minimal polynomial over QQ of a second generator b.",
)
def minpoly(element: str, modulus: Polynomial, adjoin: Polynomial | None):
    """Minimal polynomial over QQ of an element of a number field."""
    from galoiskit.numfield import NumberField, TensorBasisField, min_poly_of_element
    from galoiskit.parsers import PolySyntaxError, parse_element
    from galoiskit.types import serialize_polynomial

    with exit_on_domain_error():
        ambient: NumberField | TensorBasisField
        if adjoin is None:
            ambient = NumberField(modulus)
            values = {"a": ambient.gen}
            one = ambient.one
        else:
            ambient = TensorBasisField(modulus, adjoin)
            values = {"a": ambient.alpha, "b": ambient.beta}
            one = ambient.field.one

        try:
            e = parse_element(element, values, one)
        except PolySyntaxError as exc:
            raise click.BadParameter(str(exc), param_hint="ELEMENT") from None

        mp = min_poly_of_element(e, ambient)
        emit(
            {
                "element": str(e),
                "field_degree": ambient.degree,
                "degree": len(mp.coeffs) - 1,
                "minpoly": serialize_polynomial(mp),
            }
        )


@main.command()
@cloup.option("--p", "p", type=int, help="Characteristic of the field.")
@cloup.option(
    "--modulus",
    help="Irreducible polynomial over F_p in x; builds F_p[a]/<modulus>.",
)
@cloup.option("--ring", type=int, help="Use the ring Z_n instead of a field.")
@cloup.option(
    "--format",
    "output_format",
    type=cloup.Choice(["json", "table"]),
    default="json",
    show_default=True,
    help="Output serialization format.",
)
@cloup.constraint(cloup.constraints.RequireExactly(1), ["p", "ring"])
@cloup.constraint(cloup.constraints.mutually_exclusive, ["modulus", "ring"])
def ff(p: int | None, modulus: str | None, ring: int | None, output_format: str):
    """Multiplication table of F_p, F_p[a]/<f> or Z_n."""
    from galoiskit.domains import Domain, ModularRing, PrimeField
    from galoiskit.modp import QuotientField, multiplication_table
    from galoiskit.parsers import PolySyntaxError, parse_poly

    with exit_on_domain_error():
        domain: Domain
        if ring is not None:
            domain = ModularRing(ring)
        else:
            assert p is not None
            domain = PrimeField(p)
            if modulus:
                try:
                    f = parse_poly(modulus, domain=domain)
                except PolySyntaxError as exc:
                    raise click.BadParameter(str(exc), param_hint="--modulus") from None
                domain = QuotientField(f)

        labels = [domain.format(e) for e in domain.elements()]
        table = [[domain.format(c) for c in row] for row in multiplication_table(domain)]

        if output_format == "table":
            emit((labels, table), output_format="table")
        else:
            emit(
                {
                    "domain": str(domain),
                    "order": domain.order,
                    "is_field": domain.is_field,
                    "elements": labels,
                    "table": table,
                }
            )


@main.command()
@cloup.argument("degrees", type=int, nargs=-1, required=True)
def tower(degrees: Sequence[int]):
    """Degree of a tower of extensions from the degrees of its steps."""
    from galoiskit.numfield import tower_degree

    with exit_on_domain_error():
        emit({"degrees": list(degrees), "degree": tower_degree(degrees)})


# PART/ constructions


@main.command()
@cloup.argument("n", type=int)
def ngon(n: int):
    """Can the regular n-gon be constructed with ruler and compass?"""
    from galoiskit.construct import ngon_constructible

    with exit_on_domain_error():
        emit({"n": n, **ngon_constructible(n).model_dump(mode="json")})


@main.command()
@cloup.argument("value")
@cloup.option(
    "--degrees",
    is_flag=True,
    help="Read VALUE as an angle in degrees instead of the n in pi/n.",
)
def angle(value: str, degrees: bool):
    """Can the angle pi/n (or an angle in degrees) be constructed?"""
    from galoiskit.construct import angle_degrees_constructible, angle_pi_over_n_constructible

    with exit_on_domain_error():
        if degrees:
            try:
                amount = Fraction(value)
            except ValueError:
                raise click.BadParameter(f"{value!r} is not a number", param_hint="VALUE") from None
            verdict = angle_degrees_constructible(amount)
        else:
            try:
                n = int(value)
            except ValueError:
                raise click.BadParameter(f"{value!r} is not an integer", param_hint="VALUE") from None
            verdict = angle_pi_over_n_constructible(n)
        emit({"angle": value, **verdict.model_dump(mode="json")})


@main.command()
@cloup.argument("poly", type=POLYNOMIAL, required=False)
@cloup.option("--degree", type=int, help="Degree of the minimal polynomial.")
@cloup.option(
    "--solid",
    help="Doubling the volume of a solid, e.g. 'octahedron' or 'hypercube'.",
)
def constructible(poly: Polynomial | None, degree: int | None, solid: str | None):
    """
    Apply the power-of-two test to a number given by its minimal polynomial.

    A passing test is only a necessary condition for constructibility.
    """
    from galoiskit.construct import number_necessary_test, platonic_doubling

    if sum(x is not None for x in (poly, degree, solid)) != 1:
        raise click.UsageError("Give exactly one of POLY, --degree or --solid.")

    with exit_on_domain_error():
        if solid is not None:
            verdict = platonic_doubling(solid)
        elif poly is not None:
            verdict = number_necessary_test(poly)
        else:
            assert degree is not None
            verdict = number_necessary_test(degree)
        emit(verdict)


# PART/ permutation groups


@main.command()
@cloup.argument("cycles", type=PermutationType(), nargs=-1)
@cloup.option("--degree", type=int, help="Number of points. [default: largest point]")
@cloup.option(
    "--word",
    help="Follow this word in the generators from the product, e.g. 'st^2s^-1'.",
)
@cloup.option(
    "--gen",
    "generators",
    multiple=True,
    metavar="NAME=CYCLES",
    help="Generator used by --word. This option can be used multiple times.",
)
def perm(
    cycles: Sequence[Permutation],
    degree: int | None,
    word: str | None,
    generators: Sequence[str],
):
    """Compose permutations right to left, optionally walking a word."""
    from galoiskit.permgrp import Permutation, apply_word, parse_cycles

    with exit_on_domain_error():
        gens: dict[str, Permutation] = {}
        for item in generators:
            name, sep, text = item.partition("=")
            if not sep:
                raise click.BadParameter(f"expect NAME=CYCLES, got {item!r}", param_hint="--gen")
            gens[name.strip()] = parse_cycles(text)

        n = max(
            [degree or 0, *(c.degree for c in cycles), *(g.degree for g in gens.values())]
        ) or 1
        gens = {name: parse_cycles(str(g), n) for name, g in gens.items()}

        result = Permutation.identity(n)
        for c in cycles:
            result = result * parse_cycles(str(c), n)
        if word:
            result = apply_word(result, word, gens)

        emit(
            {
                "permutation": str(result),
                "images": list(result.images),
                "order": result.order,
                "sign": result.sign,
                "cycle_type": list(result.cycle_type),
            }
        )


@main.command()
@cloup.argument("name", help="Group name such as s3, d4, a5, c6, v4 or f20.")
@cloup.option(
    "-o",
    "--out",
    type=cloup.file_path(writable=True),
    help="File to write the DOT graph to.",
)
def lattice(name: str, out: Path | None):
    """Subgroup lattice of a named group, as a DOT graph."""
    from galoiskit.permgrp import lattice, named_group

    with exit_on_domain_error():
        result = lattice(named_group(name))
        logger.info(
            "%s has %d subgroups and %d covering relations",
            name,
            len(result.subgroups),
            len(result.edges),
        )
        emit(result, output_format="dot", out=out)
