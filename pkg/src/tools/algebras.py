"""
Algebra Tools

MCP tools for analyzing single Nakayama algebras.
"""

from typing import Optional
from pydantic import BaseModel, Field


class AnalyzeInput(BaseModel):
    """Input schema for nakayama_analyze"""
    algebra: str = Field(
        description="Kupisch series like [3,4,4,3,2,1] or cyclic:[3,3,3,4], or a U/D Dyck path word"
    )
    format: Optional[str] = Field(
        "human",
        description="human for a readable report, json for the full report object"
    )


class ResolutionInput(BaseModel):
    """Input schema for nakayama_resolution"""
    algebra: str = Field(
        description="Kupisch series or U/D Dyck path word"
    )
    vertex: int = Field(
        description="Top vertex i of the module b(i, length), 0-based"
    )
    length: Optional[int] = Field(
        1,
        description="Length k of the module b(i, k); 1 gives the simple module S_i"
    )
    max_terms: Optional[int] = Field(
        None,
        description="Cut the resolution after this many terms (default 2n for infinite pdim)"
    )


# Tool handler functions

async def analyze_handler(params: dict) -> str:
    """Full report for one algebra"""
    from ..reports import analyze
    from ..utils.formatters import format_report, format_error

    try:
        report = analyze(params["algebra"])
        if params.get("format") == "json":
            return report.model_dump_json(indent=2)
        return format_report(report)

    except Exception as e:
        return format_error(e, f"analyzing {params.get('algebra')}")


async def resolution_handler(params: dict) -> str:
    """Minimal projective resolution of a uniserial module"""
    from ..reports import resolve
    from ..utils.formatters import format_resolution, format_error

    try:
        report = resolve(
            params["algebra"],
            int(params["vertex"]),
            length=int(params.get("length") or 1),
            max_terms=params.get("max_terms"),
        )
        return format_resolution(report)

    except Exception as e:
        return format_error(e, f"resolving b({params.get('vertex')}, {params.get('length') or 1})")


# Tool definitions for MCP server registration
ALGEBRA_TOOLS = [
    {
        "name": "nakayama_analyze",
        "description": """Analyze a Nakayama algebra given by its Kupisch series.

Returns:
- Classification (connected linear, linear product, cyclic)
- Loewy length, global dimension, projective dimension of every simple
- coKupisch series and sincerity
- Cartan matrix, determinant and magnitude
- Resolution quiver cycles and weights (cyclic algebras)
- Associated Dyck paths with height and bounce count, when a bijection applies

Example: analyze cyclic:[3,3,3,4] (global dimension 5, magnitude 1).""",
        "inputSchema": AnalyzeInput.model_json_schema(),
        "handler": analyze_handler
    },
    {
        "name": "nakayama_resolution",
        "description": "Compute the syzygies and the minimal projective resolution of the uniserial module b(vertex, length) over a Nakayama algebra. Resolution terms are listed by the vertex of their projective cover; infinite resolutions are truncated.",
        "inputSchema": ResolutionInput.model_json_schema(),
        "handler": resolution_handler
    }
]
