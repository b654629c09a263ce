"""Shipped preset configs."""

from ahbplus.presets.catalog import (
    describe_preset,
    load_preset,
    preset_document,
    preset_names,
    register_preset,
)

__all__ = ["describe_preset", "load_preset", "preset_document", "preset_names", "register_preset"]
