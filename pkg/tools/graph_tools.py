"""MCP tool registrations for graph analysis, generation and connectivity."""

from __future__ import annotations

import json
from typing import Optional

from mcp.server.fastmcp import FastMCP

from core.analysis import analyze
from core.config import Limits
from core.errors import TGraphError
from core.formats import format_edge_list, graph_from_text, parse_vertex_set
from core.generators import generate
from core.graph import is_k_connected, kl_counterexample, min_separator, min_separator_unrestricted


def register_graph_tools(mcp: FastMCP, limits: Limits) -> None:
    """Register analysis, generation and connectivity tools on the MCP server."""

    # ------------------------------------------------------------------
    # Analysis and generation
    # ------------------------------------------------------------------

    @mcp.tool()
    async def analyze_graph(graph: str) -> str:
        """Analyze a finite graph: chromatic number, Hadwiger number and its tree decomposition.

        Exact solvers run only under the configured size guards; above them the report gives a lower/upper bound pair marked "bound".
        The inequalities chi <= height and h <= height (height of the decomposition tree) are judged from the reported values.

        Args:
            graph (str): Either a generator spec such as 'gen:cycle:5' or edge-list text ('n 4' header optional, one 'u v' pair per line).
        """
        try:
            report = analyze(graph_from_text(graph), limits=limits)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return report.model_dump_json(by_alias=True)

    @mcp.tool()
    async def generate_graph(spec: str) -> str:
        """Build a graph from a generator spec and return it as an edge list.

        Families: path:n, cycle:n, complete:n, star:leaves, complete-bipartite:a,b, apex-cliques:s1,s2,...,
        subdivided-complete:k, random-connected:n,p,seed, comparability-random-tree:nodes,seed.

        Args:
            spec (str): The spec, with or without the 'gen:' prefix (e.g. 'apex-cliques:2,3').
        """
        try:
            g = generate(spec)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return json.dumps({"n": g.n, "edges": g.edge_count, "edge_list": format_edge_list(g)})

    # ------------------------------------------------------------------
    # Connectivity
    # ------------------------------------------------------------------

    @mcp.tool()
    async def graph_connectivity(graph: str, k: int, l: Optional[int] = None) -> str:
        """Test k-connectivity and, when l is given, (k, l)-connectivity.

        A graph is (k, l)-connected if removing fewer than k vertices always leaves at least one and fewer than l components.
        When it is not, a smallest offending removal set is returned.

        Args:
            graph (str): Generator spec or edge-list text.
            k (int): Vertex-removal bound (positive).
            l (Optional[int]): Component bound (positive); omit to test plain k-connectivity only.
        """
        try:
            g = graph_from_text(graph)
            result: dict = {"k": k, "k_connected": is_k_connected(g, k)}
            if l is not None:
                witness = kl_counterexample(g, k, l, limits=limits)
                result.update(l=l, kl_connected=witness is None, counterexample=sorted(witness) if witness else None)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return json.dumps(result)

    @mcp.tool()
    async def minimum_separator(graph: str, x: str, y: str) -> str:
        """Find a minimum vertex set separating two disjoint vertex sets.

        The separator avoids x and y; "separator" is null when no such set exists (some x vertex is adjacent to some y vertex).
        "unrestricted" is a minimum set that may also use vertices of x and y.

        Args:
            graph (str): Generator spec or edge-list text.
            x (str): Comma-separated vertex ids of the first set (e.g. '0' or '0,1').
            y (str): Comma-separated vertex ids of the second set.
        """
        try:
            g = graph_from_text(graph)
            xs, ys = parse_vertex_set(x), parse_vertex_set(y)
            sep = min_separator(g, xs, ys)
            loose = min_separator_unrestricted(g, xs, ys)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return json.dumps({
            "separator": None if sep is None else sorted(sep.vertices),
            "size": None if sep is None else sep.size,
            "unrestricted": sorted(loose.vertices),
        })
