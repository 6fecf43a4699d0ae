from __future__ import annotations

import json
import typing

from pydantic import BaseModel

from galoiskit.console.outputs.base import OutputBuilder

if typing.TYPE_CHECKING:
    from typing import Any, TextIO


class JsonOutputBuilder(OutputBuilder):
    """One JSON object per result, one result per line."""

    def __init__(self):
        super().__init__()
        self.results: list[dict[str, Any]] = []

    def update(self, result: BaseModel | dict[str, Any]) -> None:
        if isinstance(result, BaseModel):
            result = result.model_dump(mode="json")
        self.results.append(result)

    def dump(self, stream: TextIO) -> None:
        for result in self.results:
            print(json.dumps(result, ensure_ascii=False), file=stream)
