from __future__ import annotations

import io
import typing

import click

from galoiskit.console.outputs.base import OutputBuilder

if typing.TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import TextIO


class TableOutputBuilder(OutputBuilder):
    """
    Multiplication tables in row/column layout, with the header row and column
    emphasized.
    """

    def __init__(self):
        super().__init__()
        self._buffer = io.StringIO()

    def writeline(self, *values):
        print(*values, sep="", file=self._buffer)

    def update(self, result: tuple[Sequence[str], Sequence[Sequence[str]]]) -> None:
        labels, rows = result
        width = max(map(len, labels), default=1)
        delimiter = click.style(" | ", dim=True)

        self.writeline(
            " " * width,
            delimiter,
            " ".join(click.style(f"{label:>{width}}", bold=True) for label in labels),
        )
        self.writeline(click.style("-" * ((width + 1) * (len(labels) + 1) + 2), dim=True))
        for label, row in zip(labels, rows, strict=True):
            self.writeline(
                click.style(f"{label:>{width}}", bold=True),
                delimiter,
                " ".join(f"{cell:>{width}}" for cell in row),
            )
        self.writeline()

    def dump(self, stream: TextIO) -> None:
        click.echo(self._buffer.getvalue(), file=stream, nl=False)
