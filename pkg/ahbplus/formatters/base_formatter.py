"""Base formatter class."""

from abc import ABC, abstractmethod
from typing import Any, Dict


class BaseFormatter(ABC):
    """Turns a report document into text and back."""

    name: str = ""

    @abstractmethod
    def format(self, data: Dict[str, Any]) -> str:
        """Format a report document.

        Args:
            data: Report document (plain JSON data)

        Returns:
            Formatted text
        """

    @abstractmethod
    def parse(self, text: str) -> Dict[str, Any]:
        """Parse formatted text back into a report document."""
