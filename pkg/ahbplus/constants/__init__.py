"""Constants for ahbplus."""

from ahbplus.constants.constants import *  # noqa: F401,F403
from ahbplus.constants.constants import __all__  # noqa: F401
