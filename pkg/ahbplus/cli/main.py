"""Main CLI entry point."""

import typer

from ahbplus.cli.presets import presets_app
from ahbplus.cli.run import run

app = typer.Typer(name="ahbplus", help="AHB+ bus and DDR controller simulator")

app.command(name="run")(run)
app.add_typer(presets_app, name="presets")


def cli():
    """CLI entry point."""
    app()


if __name__ == "__main__":
    cli()
