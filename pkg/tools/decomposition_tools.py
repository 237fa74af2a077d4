"""MCP tool registrations for tree decompositions."""

from __future__ import annotations

import json
from typing import Optional

from mcp.server.fastmcp import FastMCP

from core.config import Limits
from core.decomposition import CheckResult, consumption_check, decompose, level_width_check, verify_decomposition
from core.errors import TGraphError
from core.formats import decomposition_to_dot, graph_from_text
from core.schemas import DecompositionDoc, LevelWidthDoc, VerificationDoc


def register_decomposition_tools(mcp: FastMCP, limits: Limits) -> None:
    """Register decomposition build/verify tools on the MCP server."""

    @mcp.tool()
    async def decompose_graph(graph: str, dot: Optional[bool] = False) -> str:
        """Build the tree decomposition T_G of a graph.

        Every tree node carries one vertex and a cone (a connected vertex set). Roots sit on the least vertex of each component;
        a node's children are the components of its cone minus its vertex, each carried by the neighbour of the parent's vertex
        nearest to the component's least vertex. "f_edges" are the graph's edges carried over to tree nodes.

        Args:
            graph (str): Generator spec (e.g. 'gen:complete-bipartite:2,2') or edge-list text.
            dot (Optional[bool]): Also return a Graphviz DOT rendering of the tree under "dot".
        """
        try:
            d = decompose(graph_from_text(graph))
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        doc = DecompositionDoc.from_decomposition(d)
        if not dot:
            return doc.model_dump_json(by_alias=True)
        return json.dumps({"decomposition": doc.model_dump(by_alias=True), "dot": decomposition_to_dot(d)})

    @mcp.tool()
    async def verify_graph_decomposition(graph: str, decomposition: Optional[str] = None) -> str:
        """Check every structural property of a decomposition against its graph.

        Reports each named check (partition, cone connectivity, child cones, nesting, successor rule, F-edges,
        comparability, T-graph, quotient, levels) with the first problem found, plus the vertex-consumption trace check.

        Args:
            graph (str): Generator spec or edge-list text.
            decomposition (Optional[str]): A decomposition JSON document as returned by decompose_graph; omit to verify the graph's own T_G.
        """
        try:
            g = graph_from_text(graph)
            d = DecompositionDoc.from_json(decomposition).to_decomposition() if decomposition else decompose(g)
            report = verify_decomposition(g, d)
            problems = consumption_check(g, d)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        consumption = CheckResult("consumption", not problems, problems[0] if problems else "")
        return VerificationDoc.from_report(report, [consumption]).model_dump_json(by_alias=True)

    @mcp.tool()
    async def level_width_report(graph: str, k: int, l: int) -> str:
        """Check the level-width consequence of (k, l)-connectivity on the graph's decomposition.

        For every level with fewer than k vertices carried below it, a (k, l)-connected graph has fewer than l nodes on that level.

        Args:
            graph (str): Generator spec or edge-list text.
            k (int): Vertex-removal bound (positive).
            l (int): Component bound (positive).
        """
        try:
            g = graph_from_text(graph)
            report = level_width_check(g, decompose(g), k, l, limits=limits)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return LevelWidthDoc.from_report(report).model_dump_json(by_alias=True)
