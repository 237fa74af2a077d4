import pytest

from core.config import Limits
from core.generators import complete, complete_bipartite, cycle, path, star
from core.graph import Graph
from core.tree import ROOT, Tree


@pytest.fixture
def p3():
    """Path 0-1-2."""
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c4():
    """Cycle 0-1-2-3-0."""
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k13():
    """Star with center 0 and leaves 1, 2, 3."""
    return star(3)


@pytest.fixture
def k22():
    """Complete bipartite graph with parts {0, 1} and {2, 3}."""
    return complete_bipartite(2, 2)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def two_triangles_apex():
    """Vertex 0 joined to vertex 1 of triangle {1,2,3} and vertex 4 of triangle {4,5,6}."""
    return Graph.from_edges(7, [(0, 1), (0, 4), (1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])


@pytest.fixture
def chain3():
    return Tree((ROOT, 0, 1))


@pytest.fixture
def claw_tree():
    """Root 0 with children 1, 2, 3."""
    return Tree((ROOT, 0, 0, 0))


@pytest.fixture
def limits():
    return Limits()


@pytest.fixture
def mcp_server():
    """Bare FastMCP server to register tools on."""
    from mcp.server.fastmcp import FastMCP
    return FastMCP("TestServer")
