import json

import pytest

from core.config import Limits
from tools.coloring_tools import register_coloring_tools


def _tool(mcp_server, name):
    for tool in mcp_server._tool_manager.list_tools():
        if tool.name == name:
            return tool.fn
    return None


@pytest.mark.asyncio
async def test_chromatic(mcp_server, limits):
    register_coloring_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "chromatic")
    assert tool_func is not None
    result = json.loads(await tool_func(graph="gen:apex-cliques:2,3"))

    assert result["count"] == 4
    assert result["colors"][0] == 0


@pytest.mark.asyncio
async def test_chromatic_guard(mcp_server):
    register_coloring_tools(mcp_server, Limits(max_exact_chromatic=4))

    tool_func = _tool(mcp_server, "chromatic")
    result = json.loads(await tool_func(graph="gen:complete:5"))

    assert "max_exact_chromatic" in result["error"]


@pytest.mark.asyncio
async def test_color_from_partition(mcp_server, limits):
    register_coloring_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "color_from_partition")
    result = json.loads(await tool_func(graph="gen:path:4", partition="0 -1 0 1\n1 0 2 3\n"))

    assert result == {"schema": 1, "colors": [0, 1, 2, 3], "count": 4}


@pytest.mark.asyncio
async def test_color_from_partition_rejects_bad_partition(mcp_server, limits):
    register_coloring_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "color_from_partition")
    siblings = json.loads(await tool_func(graph="gen:path:4", partition="0 -1 0 1\n1 -1 2 3\n"))
    assert "error" in siblings

    malformed = json.loads(await tool_func(graph="gen:path:4", partition="0 -1\n"))
    assert malformed["error"].startswith("line 1:")
