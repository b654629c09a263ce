"""Version information for ahbplus."""

__version__ = "0.3.0"
