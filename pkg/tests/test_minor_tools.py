import json

import pytest

from core.generators import subdivided_complete
from core.minors import MinorWitness, verify_minor
from core.schemas import FamilyDoc, WitnessDoc
from tools.minor_tools import register_minor_tools

TWO_TRIANGLES_APEX = "0 1\n0 4\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"


def _tool(mcp_server, name):
    for tool in mcp_server._tool_manager.list_tools():
        if tool.name == name:
            return tool.fn
    return None


def _family(k, branch_sets):
    return FamilyDoc.from_family(k, [MinorWitness.of(sets) for sets in branch_sets]).to_json()


@pytest.mark.asyncio
async def test_find_minor(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "find_minor")
    assert tool_func is not None
    result = await tool_func(graph="gen:subdivided-complete:4", k=4)

    witness = WitnessDoc.from_json(result).to_witness()
    assert witness.k == 4
    assert verify_minor(subdivided_complete(4), witness)


@pytest.mark.asyncio
async def test_find_minor_none(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "find_minor")
    result = json.loads(await tool_func(graph="gen:cycle:5", k=4))

    assert result == {"witness": None}


@pytest.mark.asyncio
async def test_find_minor_guard(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "find_minor")
    result = json.loads(await tool_func(graph="gen:complete:20", k=3))

    assert "max_exact_minor" in result["error"]


@pytest.mark.asyncio
async def test_hadwiger(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "hadwiger")
    result = json.loads(await tool_func(graph="gen:apex-cliques:2,3"))

    assert result["hadwiger"] == 4
    assert len(result["witness"]["branch_sets"]) == 4

    error = json.loads(await tool_func(graph=""))
    assert "error" in error


@pytest.mark.asyncio
async def test_subdivision(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "subdivision")
    result = json.loads(await tool_func(graph="gen:complete:4"))
    assert result["m"] == 4
    assert set(result["paths"]) == {"0-1", "0-2", "0-3", "1-2", "1-3", "2-3"}

    error = json.loads(await tool_func(graph="0 1\n2 3\n"))
    assert "error" in error


@pytest.mark.asyncio
async def test_check_kurepa_family(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "check_kurepa_family")
    family = _family(3, [[{1}, {2}, {3}], [{4}, {5}, {6}]])
    result = json.loads(await tool_func(graph=TWO_TRIANGLES_APEX, family=family, chains=True))

    assert result["verdict"] is True
    assert result["pairs"][0]["separator"] == [0]
    assert result["chains_distinct"] is True


@pytest.mark.asyncio
async def test_check_kurepa_family_rejects_complete_graph(mcp_server, limits):
    register_minor_tools(mcp_server, limits)

    tool_func = _tool(mcp_server, "check_kurepa_family")
    family = _family(3, [[{0}, {1}, {2}], [{3}, {4}, {5}]])
    result = json.loads(await tool_func(graph="gen:complete:6", family=family))

    assert result["verdict"] is False
    assert result["pairs"][0]["separator"] is None

    error = json.loads(await tool_func(graph="gen:complete:6", family="not json"))
    assert "error" in error
