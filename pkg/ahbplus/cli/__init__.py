"""CLI module."""

from ahbplus.cli.main import app, cli

__all__ = ["app", "cli"]
