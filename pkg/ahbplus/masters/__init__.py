"""Seeded traffic masters."""

from ahbplus.masters.master import MasterProgress, TrafficMaster
from ahbplus.masters.pattern import PatternSpec, Stimulus, make_pattern, master_base

__all__ = [
    "MasterProgress",
    "PatternSpec",
    "Stimulus",
    "TrafficMaster",
    "make_pattern",
    "master_base",
]
