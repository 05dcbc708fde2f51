"""Parastab Commands.

Importing this package registers every command with the ComponentRegistry.
"""

from commands.rootsys import RootSystemCommand
from commands.submodules import SubmodulesCommand
from commands.stability import SearchPolarizationCommand, StabilityCommand
from commands.demazure import DemazureCommand
from commands.sweep import SweepCommand

__all__ = [
    "RootSystemCommand",
    "SubmodulesCommand",
    "StabilityCommand",
    "SearchPolarizationCommand",
    "DemazureCommand",
    "SweepCommand",
]
