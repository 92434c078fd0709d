import json

import pytest

from src import config
from src.config import Settings
from src.tools import ALL_TOOLS
from src.tools.algebras import AnalyzeInput, analyze_handler, resolution_handler
from src.tools.families import distribution_handler, enumerate_handler, verify_handler
from src.tools.paths import bijection_handler, dyck_statistics_handler


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    monkeypatch.setattr(config, "_settings", Settings())


def test_tool_registry():
    assert [tool["name"] for tool in ALL_TOOLS] == [
        "nakayama_analyze",
        "nakayama_resolution",
        "nakayama_dyck_statistics",
        "nakayama_bijection",
        "nakayama_enumerate",
        "nakayama_distribution",
        "nakayama_verify",
    ]
    for tool in ALL_TOOLS:
        assert tool["inputSchema"]["type"] == "object"
        assert callable(tool["handler"])
    assert AnalyzeInput.model_json_schema()["required"] == ["algebra"]


async def test_analyze_handler():
    text = await analyze_handler({"algebra": "cyclic:[3,3,3,4]"})
    assert "Global dimension: 5" in text
    assert "cycle {3} weight 1" in text

    data = json.loads(await analyze_handler({"algebra": "[3,4,4,3,2,1]", "format": "json"}))
    assert data["global_dimension"] == 3


async def test_analyze_handler_reports_errors():
    text = await analyze_handler({"algebra": "[3,1]"})
    assert text.startswith("❌ Error analyzing [3,1]: Invalid Kupisch series")


async def test_resolution_handler():
    text = await resolution_handler({"algebra": "cyclic:[6,8,9,9,8,7]", "vertex": 0})
    assert "pdim 4" in text
    assert "e_0A ← e_1A ← e_0A ← e_3A ← e_0A" in text

    error = await resolution_handler({"algebra": "[2,1]", "vertex": 5})
    assert error.startswith("❌ Error resolving b(5, 1): Out of range")


async def test_dyck_statistics_handler():
    text = await dyck_statistics_handler({"path": "UUDUDD"})
    assert "  Height: 2" in text
    assert "  Area sequence: [3,3,2,1]" in text
    assert (await dyck_statistics_handler({"path": "UDD"})).startswith("❌ Error reading path UDD")


async def test_bijection_handler():
    text = await bijection_handler({"kind": "sincere", "direction": "from-dyck", "value": "[3,4,4,3,2,1]"})
    assert text.splitlines() == [
        "**sincere** (from-dyck)",
        "  Series: cyclic:[6,8,9,9,8,7]",
        "  Path: UUDUUDUDDD",
        "  Area sequence: [3,4,4,3,2,1]",
    ]

    error = await bijection_handler({"kind": "m1", "direction": "to-dyck", "value": "cyclic:[2,2]"})
    assert "Outside the bijection's domain" in error


async def test_enumerate_handler_limits_output():
    text = await enumerate_handler({"family": "dyck", "n": 3, "limit": 2})
    lines = text.splitlines()
    assert lines[0] == "Found 2 dyck object(s) for n=3:"
    assert lines[-1] == "… stopped after 2 items"

    full = await enumerate_handler({"family": "linear", "n": 3})
    assert "stopped" not in full


async def test_distribution_handler():
    text = await distribution_handler({"statistic": "gldim", "n": 3})
    assert text.endswith("polynomial: q + q^2")


async def test_verify_handler():
    text = await verify_handler({"suite": "worked-examples"})
    assert "✓ PASS  worked-examples" in text

    assert (await verify_handler({"suite": "nope"})).startswith("❌ Unknown suite: nope")
    capped = await verify_handler({"suite": "codec", "n": 100})
    assert "exceeds the configured maximum 12" in capped
    empty = await verify_handler({"suite": "codec", "n": 0})
    assert empty == "❌ Error running codec: n=0 must be at least 1"


async def test_server_dispatch():
    from src.server_stdio import call_tool, list_tools

    tools = await list_tools()
    assert len(tools) == len(ALL_TOOLS)

    [content] = await call_tool("nakayama_distribution", {"statistic": "height", "n": 3})
    assert content.type == "text"
    assert "height distribution, n=3" in content.text

    [missing] = await call_tool("nakayama_plot", {})
    assert missing.text == "❌ Unknown tool: nakayama_plot"
