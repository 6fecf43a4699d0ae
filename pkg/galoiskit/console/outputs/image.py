from __future__ import annotations

import typing

from galoiskit.console.outputs.base import OutputBuilder

if typing.TYPE_CHECKING:
    from typing import TextIO

    from galoiskit.galois import QuinticMap


class PpmOutputBuilder(OutputBuilder):
    """Plain PPM image of a quintic map; only the last map is kept."""

    def __init__(self):
        super().__init__()
        self.map: QuinticMap | None = None

    def update(self, result: QuinticMap) -> None:
        self.map = result

    def dump(self, stream: TextIO) -> None:
        if self.map is None:
            raise RuntimeError("No quintic map to write")
        stream.write(self.map.to_ppm())
