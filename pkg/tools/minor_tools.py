"""MCP tool registrations for clique minors, subdivisions and Kurepa minor families."""

from __future__ import annotations

import json
from typing import Optional

from mcp.server.fastmcp import FastMCP

from core.config import Limits
from core.decomposition import decompose
from core.errors import TGraphError
from core.formats import graph_from_text
from core.minors import find_clique_minor, greedy_subdivision, hadwiger_number, kurepa_family_check
from core.schemas import FamilyDoc, KurepaDoc, SubdivisionDoc, WitnessDoc


def register_minor_tools(mcp: FastMCP, limits: Limits) -> None:
    """Register minor search and verification tools on the MCP server."""

    @mcp.tool()
    async def find_minor(graph: str, k: int) -> str:
        """Decide whether a graph has a K_k minor and return a witness.

        The witness lists k disjoint connected branch sets, every pair joined by an edge. Returns {"witness": null} when none exists.
        Exact search; refused above the configured vertex and k limits.

        Args:
            graph (str): Generator spec (e.g. 'gen:subdivided-complete:4') or edge-list text.
            k (int): Size of the clique minor to look for.
        """
        try:
            witness = find_clique_minor(graph_from_text(graph), k, limits=limits)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        if witness is None:
            return json.dumps({"witness": None})
        return WitnessDoc.from_witness(witness).model_dump_json(by_alias=True)

    @mcp.tool()
    async def hadwiger(graph: str) -> str:
        """Compute the Hadwiger number (largest k with a K_k minor) with a witness.

        Args:
            graph (str): Generator spec or edge-list text (non-empty).
        """
        try:
            h, witness = hadwiger_number(graph_from_text(graph), limits=limits)
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return json.dumps({"hadwiger": h, "witness": WitnessDoc.from_witness(witness).model_dump(by_alias=True)})

    @mcp.tool()
    async def subdivision(graph: str) -> str:
        """Greedily grow a subdivided clique (topological clique minor) in a connected graph.

        Returns the branch vertices and, for each pair "a-b" of branch indices, the interior of the connecting path.
        The size m is a lower bound on the largest subdivided clique.

        Args:
            graph (str): Generator spec or edge-list text.
        """
        try:
            w = greedy_subdivision(graph_from_text(graph))
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return SubdivisionDoc.from_witness(w).model_dump_json(by_alias=True)

    @mcp.tool()
    async def check_kurepa_family(graph: str, family: str, k: Optional[int] = None, chains: Optional[bool] = False) -> str:
        """Verify a family of K_k minors that should be pairwise separable by fewer than k vertices.

        Each witness is checked as a K_k minor; each pair of witnesses gets a minimum separator avoiding both.
        The verdict is true iff every witness is valid and every pair is separated by fewer than k vertices.

        Args:
            graph (str): Generator spec or edge-list text.
            family (str): JSON document {"schema": 1, "k": K, "witnesses": [{"k": K, "branch_sets": [[...], ...]}, ...]}.
            k (Optional[int]): Clique size; defaults to the family's k.
            chains (Optional[bool]): Also map each valid witness to a chain of the graph's decomposition tree.
        """
        try:
            g = graph_from_text(graph)
            doc = FamilyDoc.from_json(family)
            report = kurepa_family_check(
                g, doc.to_family(), k if k is not None else doc.k, decomposition=decompose(g) if chains else None
            )
        except TGraphError as exc:
            return json.dumps({"error": str(exc)})
        return KurepaDoc.from_report(report).model_dump_json(by_alias=True)
