"""Presets CLI commands."""

import typer

presets_app = typer.Typer(name="presets", help="Shipped preset configs")

from ahbplus.cli.presets.list_presets import list_presets  # noqa: E402
from ahbplus.cli.presets.show import show  # noqa: E402

presets_app.command(name="list")(list_presets)
presets_app.command(name="show")(show)

__all__ = ["presets_app"]
