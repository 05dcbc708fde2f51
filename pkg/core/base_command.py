"""Base Command Abstractions.

Defines the interface for CLI commands.
"""

import argparse
from abc import ABC, abstractmethod
from typing import Any, Dict

from utils.logger import get_logger


class BaseCommand(ABC):
    """Abstract base class for all parastab commands.

    A command declares its flags, normalizes the parsed arguments into an
    input echo, and produces a result payload.
    """

    name: str
    help: str = ""

    def __init__(self, **kwargs: Any) -> None:
        """Initialize the command.

        Args:
            **kwargs: Shared services (e.g. ``stability``) injected by main.
        """
        self.logger = get_logger(f"command.{self.name}")
        self.config = kwargs

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the command's flags on its subparser."""

    @abstractmethod
    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Return the normalized parameters; re-running with them reproduces the result.

        Raises:
            InputError: A parameter is malformed.
        """

    @abstractmethod
    def run(self, args: argparse.Namespace) -> Any:
        """Execute the command and return a pydantic model or plain data."""

    def exit_code(self, result: Any) -> int:
        """Process exit code for a successful run."""
        return 0
