from .app import build_parser, main
from .commands import COMMANDS, CommandResult
from .morphisms import format_morphism, parse_morphism
from .workspace import Workspace, load_workspace, parse_workspace, resolve_workspace

__all__ = [
    "COMMANDS",
    "CommandResult",
    "Workspace",
    "build_parser",
    "format_morphism",
    "load_workspace",
    "main",
    "parse_morphism",
    "parse_workspace",
    "resolve_workspace",
]
