__all__ = [
    "Expression",
    "Node",
    "Unexpected",
]

from galoiskit.parsers.ast.core import Node, Unexpected
from galoiskit.parsers.ast.polynomial import Expression
