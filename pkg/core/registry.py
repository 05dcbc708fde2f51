"""Component Registry.

Centralizes the registration and discovery of CLI commands.
"""

from typing import Any, Dict, List, Optional, Type, TypeVar

T = TypeVar("T")


class ComponentRegistry:
    """Registry for parastab commands."""

    _commands: Dict[str, Type[Any]] = {}

    @classmethod
    def register_command(cls, name: str):
        """Decorator to register a command class under its CLI name."""
        def decorator(subclass: Type[T]) -> Type[T]:
            cls._commands[name] = subclass
            setattr(subclass, "name", name)
            return subclass
        return decorator

    @classmethod
    def get_command_class(cls, name: str) -> Optional[Type[Any]]:
        """Retrieve a command class by name."""
        return cls._commands.get(name)

    @classmethod
    def list_commands(cls) -> List[str]:
        """List all registered command names in registration order."""
        return list(cls._commands.keys())
