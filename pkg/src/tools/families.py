"""
Family Tools

MCP tools for enumerations, statistic distributions and property suites.
"""

from itertools import islice
from typing import Literal, Optional
from pydantic import BaseModel, Field


class EnumerateInput(BaseModel):
    """Input schema for nakayama_enumerate"""
    family: Literal["linear", "products", "cyclic", "cyclic-finite", "dyck", "trees", "m1", "sincere"] = Field(
        description="Family to list"
    )
    n: int = Field(
        description="Number of simples (semilength for dyck, vertex count for trees)"
    )
    max_entry: Optional[int] = Field(
        None,
        description="Largest Kupisch entry for the cyclic family (default 2n-1)"
    )
    raw: Optional[bool] = Field(
        False,
        description="List every cyclic series instead of one per rotation class"
    )
    limit: Optional[int] = Field(
        50,
        description="Maximum number of items to return (1-500)"
    )


class DistributionInput(BaseModel):
    """Input schema for nakayama_distribution"""
    statistic: Literal["gldim", "height"] = Field(
        description="gldim over connected linear algebras with n simples, or height over Dyck paths of semilength n-1"
    )
    n: int = Field(
        description="Number of simples"
    )


class VerifyInput(BaseModel):
    """Input schema for nakayama_verify"""
    suite: str = Field(
        description="Suite name: worked-examples, codec, homological, quiver-oracle, tree-distance, decomposition, equidistribution, m1, sincere-bounce"
    )
    n: Optional[int] = Field(
        None,
        description="Size bound (suite default when omitted)"
    )
    max_entry: Optional[int] = Field(
        None,
        description="Entry bound for cyclic enumerations"
    )


# Tool handler functions

async def enumerate_handler(params: dict) -> str:
    """List the first items of a family"""
    from ..reports import enumerate_family
    from ..utils.formatters import format_items, format_error

    try:
        family = params["family"]
        n = int(params["n"])
        limit = min(max(int(params.get("limit") or 50), 1), 500)

        items = enumerate_family(family, n, max_entry=params.get("max_entry"), raw=bool(params.get("raw")))
        values = list(islice(items, limit + 1))

        truncated = len(values) > limit
        result = format_items(family, n, values[:limit])
        if truncated:
            result += f"\n… stopped after {limit} items"
        return result

    except Exception as e:
        return format_error(e, f"enumerating {params.get('family')}")


async def distribution_handler(params: dict) -> str:
    """Distribution of gldim or height"""
    from ..reports import distribution
    from ..utils.formatters import format_distribution, format_error

    try:
        return format_distribution(distribution(params["statistic"], int(params["n"])))

    except Exception as e:
        return format_error(e, f"computing the {params.get('statistic')} distribution")


async def verify_handler(params: dict) -> str:
    """Run one property suite in a worker thread"""
    import anyio.to_thread

    from ..config import get_settings
    from ..verification import SUITES, run_suite
    from ..utils.formatters import format_suite_results, format_error

    try:
        name = params["suite"]
        if name not in SUITES:
            return f"❌ Unknown suite: {name}. Available: {', '.join(SUITES)}"

        n = params.get("n")
        cap = get_settings().max_suite_n
        if n is not None and n < 1:
            return f"❌ Error running {name}: n={n} must be at least 1"
        if n is not None and n > cap:
            return f"❌ Error running {name}: n={n} exceeds the configured maximum {cap}"

        result = await anyio.to_thread.run_sync(run_suite, name, n, params.get("max_entry"))
        return format_suite_results([result])

    except Exception as e:
        return format_error(e, f"running suite {params.get('suite')}")


# Tool definitions for MCP server registration
FAMILY_TOOLS = [
    {
        "name": "nakayama_enumerate",
        "description": """List all objects of a family for a given size.

Families:
- linear: connected linear Kupisch series (C_{n-1} of them)
- products: linear products (C_n)
- cyclic / cyclic-finite: cyclic series up to rotation, all or finite global dimension only
- dyck: Dyck paths of semilength n
- trees: ordered trees with n vertices
- m1: algebras with a unique projective of dimension n (C_n)
- sincere: sincere cyclic algebras of finite global dimension (C_{n-1})

Results are capped by limit.""",
        "inputSchema": EnumerateInput.model_json_schema(),
        "handler": enumerate_handler
    },
    {
        "name": "nakayama_distribution",
        "description": "Distribution of global dimension over connected linear Nakayama algebras with n simples, or of height over Dyck paths of semilength n-1. The two distributions coincide; compare them side by side.",
        "inputSchema": DistributionInput.model_json_schema(),
        "handler": distribution_handler
    },
    {
        "name": "nakayama_verify",
        "description": "Run an exhaustive property suite (for example quiver-oracle or sincere-bounce) up to a size bound and report pass/fail, objects checked, timing and the first counterexample.",
        "inputSchema": VerifyInput.model_json_schema(),
        "handler": verify_handler
    }
]
