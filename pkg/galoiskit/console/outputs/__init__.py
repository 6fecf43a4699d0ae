from __future__ import annotations

__all__ = ["OutputBuilder", "get_output_builder"]

from galoiskit.console.outputs.base import OutputBuilder


def get_output_builder(output_format: str) -> OutputBuilder:
    match output_format:
        case "json":
            from galoiskit.console.outputs.json import JsonOutputBuilder

            return JsonOutputBuilder()

        case "table":
            from galoiskit.console.outputs.table import TableOutputBuilder

            return TableOutputBuilder()

        case "ppm":
            from galoiskit.console.outputs.image import PpmOutputBuilder

            return PpmOutputBuilder()

        case "dot":
            from galoiskit.console.outputs.graph import DotOutputBuilder

            return DotOutputBuilder()

    raise RuntimeError(f"Unsupported output format: {output_format}")
