"""Logger configuration for ahbplus."""

import logging
from typing import Union

# Create logger
logger = logging.getLogger("ahbplus")
logger.setLevel(logging.INFO)

# Create console handler if not exists
if not logger.handlers:
    handler = logging.StreamHandler()
    handler.setLevel(logging.INFO)
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)


def configure_logging(level: Union[int, str] = logging.INFO) -> None:
    """Configure logging level (a number or a name such as ``"WARNING"``)."""
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)
