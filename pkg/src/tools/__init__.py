"""MCP Tools for Nakayama algebras"""

from .algebras import ALGEBRA_TOOLS
from .paths import PATH_TOOLS
from .families import FAMILY_TOOLS

# Combine all tool definitions
ALL_TOOLS = (
    ALGEBRA_TOOLS +
    PATH_TOOLS +
    FAMILY_TOOLS
)

__all__ = ["ALL_TOOLS"]
