"""
Nakayama MCP Server

Exposes the library as MCP tools over stdio: python -m src.server_stdio
"""

import logging
from typing import Any, Dict

import anyio
from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import TextContent, Tool

from .config import configure_logging, initialize_settings
from .tools import ALL_TOOLS

logger = logging.getLogger(__name__)

# Global MCP server
mcp_server = Server("nakayama-mcp")


@mcp_server.list_tools()
async def list_tools() -> list[Tool]:
    """List all available MCP tools"""
    return [
        Tool(
            name=tool["name"],
            description=tool["description"],
            inputSchema=tool["inputSchema"]
        )
        for tool in ALL_TOOLS
    ]


@mcp_server.call_tool()
async def call_tool(name: str, arguments: Dict[str, Any]) -> list[TextContent]:
    """Dispatch a tool call to its handler"""
    try:
        tool_def = next((t for t in ALL_TOOLS if t["name"] == name), None)
        if not tool_def:
            return [TextContent(
                type="text",
                text=f"❌ Unknown tool: {name}"
            )]

        handler = tool_def["handler"]
        result = await handler(arguments or {})
        return [TextContent(type="text", text=result)]

    except Exception as e:
        logger.error(f"Error executing tool {name}: {e}", exc_info=True)
        return [TextContent(
            type="text",
            text=f"❌ Error executing {name}: {str(e)}"
        )]


async def serve() -> None:
    """Run the server on stdin/stdout until the client disconnects"""
    async with stdio_server() as (read_stream, write_stream):
        await mcp_server.run(
            read_stream,
            write_stream,
            mcp_server.create_initialization_options()
        )


def main():
    """Main entry point"""
    settings = initialize_settings()
    configure_logging(settings)
    logger.info(f"Starting Nakayama MCP server with {len(ALL_TOOLS)} tools")
    anyio.run(serve)


if __name__ == "__main__":
    main()
