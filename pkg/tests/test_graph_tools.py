import json

import pytest

from tools.graph_tools import register_graph_tools


def _tool(mcp_server, name):
    for tool in mcp_server._tool_manager.list_tools():
        if tool.name == name:
            return tool.fn
    return None


@pytest.mark.asyncio
async def test_analyze_graph(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "analyze_graph")
    assert tool_func is not None
    result = json.loads(await tool_func(graph="gen:cycle:5"))

    assert result["schema"] == 1
    assert result["chromatic"]["value"] == 3
    assert result["hadwiger"]["value"] == 3
    assert result["decomposition"]["height"] == 5
    assert [q["status"] for q in result["inequalities"]] == ["holds", "holds"]


@pytest.mark.asyncio
async def test_analyze_graph_bounds_past_minor_k(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "analyze_graph")
    result = json.loads(await tool_func(graph="gen:apex-cliques:7,8"))

    assert "error" not in result
    assert result["hadwiger"]["exact"] is False
    assert (result["hadwiger"]["lower"], result["hadwiger"]["upper"]) == (9, 11)
    assert result["hadwiger"]["note"].startswith("bound:")
    assert result["inequalities"][1]["status"] == "undetermined"


@pytest.mark.asyncio
async def test_analyze_graph_edge_list_text(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "analyze_graph")
    result = json.loads(await tool_func(graph="n 3\n0 1\n1 2\n"))

    assert result["graph"] == {"n": 3, "edges": 2, "connected": True}
    assert result["decomposition"]["chain"] is True


@pytest.mark.asyncio
async def test_analyze_graph_reports_parse_error(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "analyze_graph")
    result = json.loads(await tool_func(graph="0 1\n1 x\n"))

    assert result["error"].startswith("line 2:")


@pytest.mark.asyncio
async def test_generate_graph(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "generate_graph")
    result = json.loads(await tool_func(spec="apex-cliques:2,3"))

    assert result["n"] == 6
    assert result["edges"] == 9
    assert result["edge_list"].startswith("n 6\n0 1\n")

    error = json.loads(await tool_func(spec="gen:nope:3"))
    assert "unknown generator family" in error["error"]


@pytest.mark.asyncio
async def test_graph_connectivity(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "graph_connectivity")
    star = json.loads(await tool_func(graph="gen:star:3", k=2, l=3))
    assert star == {"k": 2, "k_connected": False, "l": 3, "kl_connected": False, "counterexample": [0]}

    cycle = json.loads(await tool_func(graph="gen:cycle:5", k=2))
    assert cycle == {"k": 2, "k_connected": True}

    error = json.loads(await tool_func(graph="gen:cycle:5", k=0))
    assert "error" in error


@pytest.mark.asyncio
async def test_minimum_separator(mcp_server, limits):
    register_graph_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "minimum_separator")
    result = json.loads(await tool_func(graph="gen:cycle:4", x="0", y="2"))
    assert result["separator"] == [1, 3]
    assert result["size"] == 2

    adjacent = json.loads(await tool_func(graph="gen:cycle:4", x="0", y="1"))
    assert adjacent["separator"] is None
    assert adjacent["size"] is None

    error = json.loads(await tool_func(graph="gen:cycle:4", x="0", y="a"))
    assert "error" in error


def test_server_registers_every_tool():
    from server import mcp

    names = {tool.name for tool in mcp._tool_manager.list_tools()}
    assert names == {
        "analyze_graph",
        "generate_graph",
        "graph_connectivity",
        "minimum_separator",
        "decompose_graph",
        "verify_graph_decomposition",
        "level_width_report",
        "find_minor",
        "hadwiger",
        "subdivision",
        "check_kurepa_family",
        "chromatic",
        "color_from_partition",
    }
