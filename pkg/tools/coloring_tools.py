"""MCP tool registrations for graph colorings."""

from __future__ import annotations

import json

from mcp.server.fastmcp import FastMCP

from core.coloring import chromatic_number
from core.config import Limits
from core.decomposition import coloring_from_specializing
from core.errors import TGraphError
from core.formats import graph_from_text, parse_tree_partition
from core.schemas import ColoringDoc
from core.tree import height_specializing


def register_coloring_tools(mcp: FastMCP, limits: Limits) -> None:
    """Register coloring tools on the MCP server."""

    @mcp.tool()
    async def chromatic(graph: str) -> str:
        """Compute the exact chromatic number with an optimal proper coloring.

        Colors are renumbered by first occurrence in vertex order. Refused above the configured vertex limit.

        Args:
            graph (str): Generator spec (e.g. 'gen:apex-cliques:2,3') or edge-list text.
        """
        try:
            _, coloring = chromatic_number(graph_from_text(graph), limits=limits)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return ColoringDoc.from_coloring(coloring).model_dump_json(by_alias=True)

    @mcp.tool()
    async def color_from_partition(graph: str, partition: str) -> str:
        """Color a graph from a tree partition, labelling each tree node by its height.

        Vertex v in the block of node t gets color ht(t) * B + (rank of v in its block), where B is the largest block size.

        Args:
            graph (str): Generator spec or edge-list text.
            partition (str): One line per tree node: 'node parent v1 v2 ...' (parent -1 for roots).
        """
        try:
            g = graph_from_text(graph)
            p = parse_tree_partition(partition)
            coloring = coloring_from_specializing(g, p, height_specializing(p.tree))
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return ColoringDoc.from_coloring(coloring).model_dump_json(by_alias=True)
