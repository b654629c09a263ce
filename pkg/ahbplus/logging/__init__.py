"""ahbplus run logging."""

from ahbplus.logging.sim_logger import SimLogger
from ahbplus.logging.log_scopes import LogScope

__all__ = ["SimLogger", "LogScope"]
