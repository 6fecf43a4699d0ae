"""
Parser for polynomial expressions.

The text is split into lexemes by a pygments lexer and parsed by recursive
descent into an AST, which evaluates to a :class:`galoiskit.poly.Polynomial`.
Syntax errors surface as :class:`PolySyntaxError` with the byte offset of the
offending token.
"""

from __future__ import annotations

__all__ = [
    "PolySyntaxError",
    "parse_element",
    "parse_expression",
    "parse_poly",
]

import typing

from pygments.token import Other, Whitespace

import galoiskit.parsers.lexer
from galoiskit.domains import QQ
from galoiskit.parsers.ast import Expression, Unexpected
from galoiskit.parsers.ast.polynomial import find_variables
from galoiskit.poly import Polynomial
from galoiskit.utils import join_with_or

if typing.TYPE_CHECKING:
    from collections.abc import Mapping
    from typing import Any

    from galoiskit.domains import Domain
    from galoiskit.parsers.ast.core import Lexeme

_polynomial_lexer = None


class PolySyntaxError(ValueError):
    """A polynomial expression that does not follow the grammar."""

    def __init__(self, text: str, pos: int, near: str, msg: str | None = None):
        self.text = text
        self.pos = pos
        self.offset = len(text[:pos].encode())
        self.near = near
        message = f"Invalid syntax at offset {self.offset}"
        if near:
            message += f" near '{near}'"
        if msg:
            message += f": {msg}"
        super().__init__(message)


def parse_expression(text: str) -> Expression:
    """Parse polynomial text into AST."""
    global _polynomial_lexer
    if not _polynomial_lexer:
        _polynomial_lexer = galoiskit.parsers.lexer.PolynomialLexer()

    lexemes: list[Lexeme] = [
        lexeme
        for lexeme in _polynomial_lexer.get_tokens_unprocessed(text)
        if lexeme[1] not in Whitespace
    ]
    # end of input marker
    lexemes.append((len(text), Other, ""))

    node = Expression.parse(lexemes)
    if isinstance(node, Unexpected):
        raise PolySyntaxError(text, node.pos, node.text, node.msg)

    pos, token, near = lexemes[0]
    if token is not Other:
        raise PolySyntaxError(text, pos, near, "unexpected token")
    return node


def parse_poly(text: str, variable: str = "x", domain: Domain = QQ) -> Polynomial:
    """
    Parse a polynomial in one variable, e.g. ``x^5 - 4x + 2``.

    Coefficients are read as rationals and then converted into `domain`.

    Raises
    ------
    PolySyntaxError
        When the text does not follow the grammar, uses another variable, or
        has an exponent above 64.
    """
    f = parse_element(text, {variable: Polynomial.x(QQ)}, Polynomial.one(QQ))
    return f if domain == QQ else f.with_domain(domain)


def parse_element(text: str, values: Mapping[str, Any], one: Any) -> Any:
    """
    Parse an expression and evaluate it in a ring, e.g. ``a + b`` in a field
    with generators a and b.

    Raises
    ------
    PolySyntaxError
        When the text does not follow the grammar or uses a variable missing
        from `values`.
    """
    expression = parse_expression(text)
    for occurrence in find_variables(expression):
        if occurrence.name not in values:
            expected = join_with_or(sorted(values))
            raise PolySyntaxError(
                text, occurrence.pos, occurrence.name, f"expect variable {expected}"
            )
    return expression.evaluate(values, one)
