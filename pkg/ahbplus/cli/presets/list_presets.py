"""Presets list command."""

from rich.console import Console
from rich.table import Table

from ahbplus.presets import describe_preset, preset_names

console = Console()


def list_presets():
    """List shipped presets."""
    table = Table(title="Presets")
    table.add_column("name")
    table.add_column("description")
    for name in preset_names():
        table.add_row(name, describe_preset(name))
    console.print(table)
