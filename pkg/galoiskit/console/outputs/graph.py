from __future__ import annotations

import typing

from galoiskit.console.outputs.base import OutputBuilder

if typing.TYPE_CHECKING:
    from typing import TextIO

    from galoiskit.permgrp import Lattice


class DotOutputBuilder(OutputBuilder):
    """Subgroup lattices as undirected graphs in the DOT language."""

    def __init__(self):
        super().__init__()
        self.lattices: list[Lattice] = []

    def update(self, result: Lattice) -> None:
        self.lattices.append(result)

    def dump(self, stream: TextIO) -> None:
        for lattice in self.lattices:
            stream.write(lattice.to_dot())
