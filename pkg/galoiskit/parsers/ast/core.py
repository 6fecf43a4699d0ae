from __future__ import annotations

import typing
from abc import ABC, abstractmethod

from pydantic import BaseModel, ConfigDict
from pygments.token import Other

if typing.TYPE_CHECKING:
    from collections.abc import Mapping
    from typing import Any, Self

    from pygments.token import _TokenType

    type Lexeme = tuple[int, _TokenType, str]
    """Position in the text, token type and matched text."""


class Node(ABC, BaseModel):
    """A node of the expression tree."""

    model_config = ConfigDict(frozen=True)

    @classmethod
    @abstractmethod
    def parse(cls, lexemes: list[Lexeme]) -> Node | None:
        """
        Read this kind of node from the front of `lexemes`, popping what it
        consumes.

        Returns
        -------
        The node; an :class:`Unexpected` node on a syntax error; or None when
        the next lexeme cannot start this kind of node, in which case nothing
        is consumed.
        """

    @abstractmethod
    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        """
        Evaluate the subtree in a ring, given the values of the variables and
        the unit element of the ring.
        """


class Unexpected(Node):
    """A syntax error at the lexeme starting at `pos`."""

    pos: int
    text: str
    msg: str | None = None

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> None:
        return None

    @classmethod
    def at(cls, lexemes: list[Lexeme], msg: str) -> Self:
        """Error at the next lexeme; the end marker reads as end of input."""
        pos, token, text = lexemes[0]
        if token is Other:
            msg = f"unexpected end of input, {msg}"
        return cls(pos=pos, text=text, msg=msg)

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        raise TypeError("Cannot evaluate a syntax error")


def peek(
    lexemes: list[Lexeme],
    token: _TokenType,
    text: str | tuple[str, ...] | None = None,
) -> bool:
    """Whether the next lexeme has the token type `token` and one of the given texts."""
    if not lexemes:
        return False
    _, next_token, next_text = lexemes[0]
    if next_token not in token:
        return False
    if text is None:
        return True
    return next_text in ((text,) if isinstance(text, str) else text)
