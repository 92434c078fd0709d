"""
Dyck Path Tools

MCP tools for Dyck path statistics and the algebra <-> path bijections.
"""

from typing import Literal, Optional
from pydantic import BaseModel, Field


class DyckStatisticsInput(BaseModel):
    """Input schema for nakayama_dyck_statistics"""
    path: str = Field(
        description="Dyck path as a U/D word (UUDUDD) or an area sequence ([3,2,1])"
    )


class BijectionInput(BaseModel):
    """Input schema for nakayama_bijection"""
    kind: Literal["linear", "m1", "sincere", "bounded"] = Field(
        description="Which bijection to apply"
    )
    direction: Literal["to-dyck", "from-dyck"] = Field(
        description="to-dyck maps a Kupisch series to a path, from-dyck maps a path to a series"
    )
    value: str = Field(
        description="Kupisch series (to-dyck) or Dyck path (from-dyck)"
    )
    g: Optional[int] = Field(
        None,
        description="Global dimension bound, required for the bounded bijection"
    )


# Tool handler functions

async def dyck_statistics_handler(params: dict) -> str:
    """Area sequence, height, bounce and prime factors of a path"""
    from ..reports import dyck_statistics
    from ..utils.formatters import format_dyck_report, format_error

    try:
        return format_dyck_report(dyck_statistics(params["path"]))

    except Exception as e:
        return format_error(e, f"reading path {params.get('path')}")


async def bijection_handler(params: dict) -> str:
    """Apply one bijection in one direction"""
    from ..reports import run_bijection
    from ..utils.formatters import format_error

    try:
        result = run_bijection(params["kind"], params["direction"], params["value"], g=params.get("g"))

        lines = [f"**{result.kind}** ({result.direction})"]
        lines.append(f"  Series: {result.series}")
        lines.append(f"  Path: {result.path or '(empty)'}")
        lines.append(f"  Area sequence: [{','.join(str(c) for c in result.area)}]")
        return "\n".join(lines)

    except Exception as e:
        return format_error(e, f"applying the {params.get('kind')} bijection")


# Tool definitions for MCP server registration
PATH_TOOLS = [
    {
        "name": "nakayama_dyck_statistics",
        "description": "Compute the area sequence, height, bounce points, bounce count and prime factorization of a Dyck path given as a U/D word or as an area sequence.",
        "inputSchema": DyckStatisticsInput.model_json_schema(),
        "handler": dyck_statistics_handler
    },
    {
        "name": "nakayama_bijection",
        "description": """Map between Nakayama algebras and Dyck paths.

Kinds:
- linear: connected linear algebras with n simples <-> paths of semilength n-1
- m1: algebras with a unique projective of dimension n <-> paths of semilength n
- sincere: sincere cyclic algebras of finite global dimension <-> paths of semilength n-1
- bounded: linear products with global dimension <= g <-> paths of height <= g+1

Example: sincere from-dyck [3,4,4,3,2,1] gives cyclic:[6,8,9,9,8,7].""",
        "inputSchema": BijectionInput.model_json_schema(),
        "handler": bijection_handler
    }
]
