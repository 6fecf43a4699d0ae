from __future__ import annotations

import typing
from fractions import Fraction
from typing import Literal

from pygments.token import Name, Number, Operator, Punctuation

from galoiskit.parsers.ast.core import Node, Unexpected, peek

if typing.TYPE_CHECKING:
    from collections.abc import Mapping
    from typing import Any

    from galoiskit.parsers.ast.core import Lexeme

MAX_EXPONENT = 64

MINUS_SIGNS = ("-", "−")


class Expression(Node):
    """``expr := ['+' | '-'] term (('+' | '-') term)*``"""

    terms: list[tuple[Literal[1, -1], Term]]

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> Expression | Unexpected | None:
        terms = []
        sign: Literal[1, -1] = 1
        if peek(lexemes, Operator, ("+", *MINUS_SIGNS)):
            _, _, text = lexemes.pop(0)
            sign = -1 if text in MINUS_SIGNS else 1

        while True:
            term = Term.parse(lexemes)
            if term is None:
                return Unexpected.at(lexemes, "expect a term")
            if isinstance(term, Unexpected):
                return term
            terms.append((sign, term))

            if not peek(lexemes, Operator, ("+", *MINUS_SIGNS)):
                break
            _, _, text = lexemes.pop(0)
            sign = -1 if text in MINUS_SIGNS else 1

        return cls(terms=terms)

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        result = one - one
        for sign, term in self.terms:
            value = term.evaluate(values, one)
            result = result + value if sign > 0 else result - value
        return result


class Term(Node):
    """
    ``term := factor ('*'? factor)*``

    The ``*`` may be left out before a variable or a parenthesis, as in
    ``4x`` or ``x(x + 1)``.
    """

    factors: list[Factor]

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> Term | Unexpected | None:
        first = Factor.parse(lexemes)
        if first is None or isinstance(first, Unexpected):
            return first

        factors = [first]
        while True:
            if peek(lexemes, Operator, "*"):
                lexemes.pop(0)
                factor = Factor.parse(lexemes)
                if factor is None:
                    return Unexpected.at(lexemes, "expect a factor after '*'")
            elif peek(lexemes, Name) or peek(lexemes, Punctuation, "("):
                factor = Factor.parse(lexemes)
            else:
                break

            if isinstance(factor, Unexpected):
                return factor
            factors.append(factor)

        return cls(factors=factors)

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        result = one
        for factor in self.factors:
            result = result * factor.evaluate(values, one)
        return result


class Factor(Node):
    """``factor := atom ('^' uint)?``"""

    base: Atom
    exponent: int = 1

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> Factor | Unexpected | None:
        base = None
        for node_cls in (Rational, Variable, Group):
            if base := node_cls.parse(lexemes):
                break
        if base is None or isinstance(base, Unexpected):
            return base

        if not peek(lexemes, Operator, "^"):
            return cls(base=base)

        lexemes.pop(0)
        if not peek(lexemes, Number.Integer):
            return Unexpected.at(lexemes, "expect a nonnegative integer exponent")

        exponent = int(lexemes[0][2])
        if exponent > MAX_EXPONENT:
            return Unexpected.at(lexemes, f"exponent exceeds {MAX_EXPONENT}")
        lexemes.pop(0)
        return cls(base=base, exponent=exponent)

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        return self.base.evaluate(values, one) ** self.exponent


class Rational(Node):
    """``rational := uint ('/' uint)?``"""

    value: Fraction

    model_config = Node.model_config | {"arbitrary_types_allowed": True}

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> Rational | Unexpected | None:
        if not peek(lexemes, Number.Integer):
            return

        _, _, numerator = lexemes.pop(0)
        if not peek(lexemes, Operator, "/"):
            return cls(value=Fraction(int(numerator)))

        lexemes.pop(0)
        if not peek(lexemes, Number.Integer):
            return Unexpected.at(lexemes, "expect an integer denominator")
        if int(lexemes[0][2]) == 0:
            return Unexpected.at(lexemes, "zero denominator")

        _, _, denominator = lexemes.pop(0)
        return cls(value=Fraction(int(numerator), int(denominator)))

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        return one * self.value


class Variable(Node):

    pos: int
    name: str

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> Variable | None:
        if not peek(lexemes, Name):
            return
        pos, _, name = lexemes.pop(0)
        return cls(pos=pos, name=name)

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        return values[self.name]


class Group(Node):
    """``'(' expr ')'``"""

    expression: Expression

    @classmethod
    def parse(cls, lexemes: list[Lexeme]) -> Group | Unexpected | None:
        if not peek(lexemes, Punctuation, "("):
            return

        lexemes.pop(0)
        expression = Expression.parse(lexemes)
        if isinstance(expression, Unexpected):
            return expression
        if not peek(lexemes, Punctuation, ")"):
            return Unexpected.at(lexemes, "expect closing parenthesis ')'")

        lexemes.pop(0)
        return cls(expression=expression)

    def evaluate(self, values: Mapping[str, Any], one: Any) -> Any:
        return self.expression.evaluate(values, one)


type Atom = Rational | Variable | Group


def find_variables(node: Node) -> list[Variable]:
    """Variable occurrences in the subtree, left to right."""
    match node:
        case Variable():
            return [node]
        case Expression():
            return [v for _, term in node.terms for v in find_variables(term)]
        case Term():
            return [v for factor in node.factors for v in find_variables(factor)]
        case Factor():
            return find_variables(node.base)
        case Group():
            return find_variables(node.expression)
    return []


for _model in (Expression, Term, Factor, Group):
    _model.model_rebuild()
