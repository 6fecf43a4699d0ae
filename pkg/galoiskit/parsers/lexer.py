from __future__ import annotations

import typing

from pygments.lexer import RegexLexer, words
from pygments.token import Name, Number, Operator, Punctuation, Whitespace

if typing.TYPE_CHECKING:
    from typing import ClassVar


class PolynomialLexer(RegexLexer):
    """
    Lexer for univariate polynomial expressions such as ``x^5 - 4x + 2``.

    Both the ASCII hyphen and the Unicode minus sign are minus operators.
    Characters outside the grammar come out as ``Error`` tokens.
    """

    name: ClassVar = "Polynomial"

    tokens: ClassVar = {
        "root": [
            (r"\s+", Whitespace),
            (r"\d+", Number.Integer),
            (r"[A-Za-z_]\w*", Name.Variable),
            (words(("+", "-", "−", "*", "/", "^")), Operator),
            (r"[()]", Punctuation),
        ],
    }
