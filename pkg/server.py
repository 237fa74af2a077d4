"""T-graph MCP Server – finite graph decompositions, minors and colorings.

Exposes the tree decomposition T_G of a finite graph together with exact
clique-minor, Hadwiger-number and chromatic-number solvers as MCP tools
for use by LLM agents.
"""

from mcp.server.fastmcp import FastMCP

from core.config import Limits
from tools.coloring_tools import register_coloring_tools
from tools.decomposition_tools import register_decomposition_tools
from tools.graph_tools import register_graph_tools
from tools.minor_tools import register_minor_tools

# ---------------------------------------------------------------------------
# Size guards
# ---------------------------------------------------------------------------

limits = Limits.from_env()

# ---------------------------------------------------------------------------
# Create MCP server and register tools
# ---------------------------------------------------------------------------

mcp = FastMCP(
    "tgraph",
    instructions=(
        "T-graph MCP server for finite graph structure. "
        "Pass graphs either as a generator spec like 'gen:cycle:5' or 'gen:apex-cliques:2,3', "
        "or as edge-list text ('n 4' header, then one 'u v' pair per line). "
        "Use analyze_graph for a summary, decompose_graph and verify_graph_decomposition for the tree decomposition, "
        "find_minor, hadwiger and subdivision for clique minors, chromatic for exact colorings, "
        "and graph_connectivity / minimum_separator / level_width_report for connectivity questions. "
        "Exact solvers refuse graphs above the configured size guards and say so in an 'error' field."
    ),
)

register_graph_tools(mcp, limits)
register_decomposition_tools(mcp, limits)
register_minor_tools(mcp, limits)
register_coloring_tools(mcp, limits)

# ---------------------------------------------------------------------------
# Entrypoint
# ---------------------------------------------------------------------------

if __name__ == "__main__":
    mcp.run(transport="stdio")
