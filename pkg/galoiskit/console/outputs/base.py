from __future__ import annotations

import typing
from abc import ABC, abstractmethod

if typing.TYPE_CHECKING:
    from typing import Any, TextIO


class OutputBuilder(ABC):
    """
    Abstract base class for building command output.
    """

    @abstractmethod
    def update(self, result: Any) -> None:
        """Add a result to the output."""

    @abstractmethod
    def dump(self, stream: TextIO) -> None:
        """Serialize the data to a stream."""
