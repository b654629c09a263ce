"""Presets show command."""

import json

import typer

from ahbplus.errors import AhbPlusError
from ahbplus.presets import load_preset


def show(
    name: str = typer.Argument(..., help="Preset name"),
):
    """Print a preset's fully resolved config (usable with ``run --config``)."""
    try:
        config = load_preset(name)
    except AhbPlusError as e:
        typer.echo(str(e), err=True)
        raise typer.Exit(1)
    typer.echo(json.dumps(config.resolved(), indent=2))
