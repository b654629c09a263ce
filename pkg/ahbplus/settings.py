"""Settings management for ahbplus."""

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv


@dataclass
class Settings:
    """Process-level settings (not part of any simulation config)."""

    output_dir: Path = Path("ahbplus-out")
    log_level: str = "INFO"

    def __post_init__(self):
        """Load overrides from the environment (and a local .env file)."""
        self.reload()

    def reload(self) -> None:
        """Re-read environment variables."""
        load_dotenv(override=False)
        self.output_dir = Path(os.getenv("AHBPLUS_OUTPUT_DIR", str(self.output_dir)))
        self.log_level = os.getenv("AHBPLUS_LOG_LEVEL", self.log_level).upper()


# Global settings instance
settings = Settings()
