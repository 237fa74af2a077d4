"""Finite simple undirected graphs on vertices ``0..n-1``.

Connectivity, distances, separators and the generalized (k, l)-connectedness
test. Heavy lifting (components, vertex cuts, cliques) is delegated to
networkx; ``Graph`` itself stays an immutable value object.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import networkx as nx

from core.config import KL_GUARD_MIN_VERTICES, Limits
from core.errors import PreconditionError, ResourceGuardError

logger = logging.getLogger(__name__)

VertexSet = frozenset[int]
Edge = tuple[int, int]

_SOURCE = "source"
_SINK = "sink"


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Edge] = frozenset()
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {self.n}")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}", clause="no self-loops")
            if u > v:
                raise PreconditionError(f"edge ({u}, {v}) not normalized; use Graph.from_edges")
            if u < 0 or v >= self.n:
                raise PreconditionError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing orientation and dropping duplicate pairs."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}", clause="no self-loops")
            normalized.add(_norm(u, v))
        return cls(n, frozenset(normalized))

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> tuple[Graph, dict]:
        """Relabel an arbitrary networkx graph onto ``0..n-1`` (sorted node order)."""
        nodes = sorted(nxg.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        g = cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nxg.edges() if a != b))
        return g, index

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def complement(self) -> Graph:
        return Graph(self.n, frozenset(e for e in combinations(range(self.n), 2) if e not in self.edges))

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Frozen networkx view of this graph, built once."""
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.sorted_edges())
        return nx.freeze(nxg)


@dataclass(frozen=True)
class Separator:
    vertices: VertexSet

    @property
    def size(self) -> int:
        return len(self.vertices)


def _check_vertices(g: Graph, vertices: Iterable[int], what: str) -> None:
    for v in vertices:
        if not 0 <= v < g.n:
            raise PreconditionError(f"{what}: vertex {v} outside 0..{g.n - 1}")


# ----------------------------------------------------------------------
# Components and distances
# ----------------------------------------------------------------------


def components(g: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    """Connected components, sorted by least member.

    With ``within``, components of the subgraph induced by those vertices.
    """
    if within is None:
        view = g.nx_view
    else:
        within = set(within)
        _check_vertices(g, within, "components")
        view = g.nx_view.subgraph(within)
    return sorted((frozenset(c) for c in nx.connected_components(view)), key=min)


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    """True iff the (induced) graph is non-empty and connected."""
    return len(components(g, within)) == 1


def distances_from(g: Graph, within: Iterable[int], source: int) -> dict[int, int]:
    """BFS distances from ``source`` inside the subgraph induced by ``within``."""
    within = set(within)
    if source not in within:
        raise PreconditionError(f"source {source} not in the restriction set")
    return dict(nx.single_source_shortest_path_length(g.nx_view.subgraph(within), source))


def distance(g: Graph, within: Iterable[int], u: int, v: int) -> float:
    """Shortest-path length using only vertices of ``within``; ``math.inf`` if none."""
    within = set(within)
    if u not in within or v not in within:
        raise PreconditionError(f"distance endpoints {u}, {v} must both lie in the restriction set")
    return distances_from(g, within, u).get(v, math.inf)


# ----------------------------------------------------------------------
# Subgraphs
# ----------------------------------------------------------------------


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph relabelled in increasing vertex order, plus old->new map."""
    kept = sorted(set(vertices))
    _check_vertices(g, kept, "induced")
    index = {v: i for i, v in enumerate(kept)}
    edges = ((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph.from_edges(len(kept), edges), index


def remove(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``g - S`` relabelled, plus old->new map."""
    s = set(s)
    return induced(g, (v for v in g.vertices if v not in s))


def quotient(g: Graph, parts: Sequence[Iterable[int]]) -> Graph:
    """Contract each part to a vertex; part i becomes vertex i."""
    owner: dict[int, int] = {}
    for i, part in enumerate(parts):
        part = frozenset(part)
        if not part:
            raise PreconditionError(f"part {i} is empty", clause="non-empty")
        _check_vertices(g, part, f"part {i}")
        for v in part:
            if v in owner:
                raise PreconditionError(
                    f"vertex {v} lies in parts {owner[v]} and {i}", clause="pairwise disjoint"
                )
            owner[v] = i
        if not is_connected(g, part):
            raise PreconditionError(f"part {i} does not induce a connected subgraph", clause="connected")
    edges = set()
    for u, v in g.edges:
        a, b = owner.get(u), owner.get(v)
        if a is not None and b is not None and a != b:
            edges.add(_norm(a, b))
    return Graph(len(parts), frozenset(edges))


# ----------------------------------------------------------------------
# Connectivity
# ----------------------------------------------------------------------


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff removing any fewer than ``k`` vertices leaves a non-empty connected graph."""
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if g.n == 0:
        return False
    if is_complete(g):
        # nothing disconnects K_n; only running out of vertices can fail
        return k <= g.n
    return nx.node_connectivity(g.nx_view) >= k


def _component_count_without(g: Graph, removed: set[int]) -> int:
    return nx.number_connected_components(g.nx_view.subgraph(v for v in g.vertices if v not in removed))


def _guard_kl(g: Graph, k: int, limits: Limits | None) -> None:
    limits = limits or Limits()
    if g.n > KL_GUARD_MIN_VERTICES and k > limits.max_kl_k:
        raise ResourceGuardError("max_kl_k", limits.max_kl_k, k)


def kl_counterexample(g: Graph, k: int, l: int, *, limits: Limits | None = None) -> VertexSet | None:
    """First S with ``|S| < k`` leaving zero or at least ``l`` components.

    Sets are tried by size, then lexicographically. ``None`` means g is
    (k, l)-connected.
    """
    if k < 1 or l < 1:
        raise PreconditionError(f"k and l must be positive, got k={k}, l={l}")
    _guard_kl(g, k, limits)
    for size in range(min(k, g.n + 1)):
        for s in combinations(range(g.n), size):
            count = _component_count_without(g, set(s))
            if count < 1 or count >= l:
                logger.debug("(%d,%d)-connectivity fails at S=%s with %d components", k, l, s, count)
                return frozenset(s)
    return None


def is_kl_connected(g: Graph, k: int, l: int, *, limits: Limits | None = None) -> bool:
    """Removing fewer than ``k`` vertices always leaves at least one and fewer than ``l`` components."""
    return kl_counterexample(g, k, l, limits=limits) is None


# ----------------------------------------------------------------------
# Separators
# ----------------------------------------------------------------------


def _cut_between(h: nx.Graph) -> VertexSet:
    if not nx.has_path(h, _SOURCE, _SINK):
        return frozenset()
    return frozenset(nx.minimum_node_cut(h, _SOURCE, _SINK))


def min_separator(g: Graph, x: Iterable[int], y: Iterable[int]) -> Separator | None:
    """Minimum S disjoint from ``x`` and ``y`` separating them, or None if none exists.

    None is returned exactly when some vertex of ``x`` is adjacent to some
    vertex of ``y``.
    """
    x, y = frozenset(x), frozenset(y)
    if not x or not y:
        raise PreconditionError("separator query sets must be non-empty")
    if x & y:
        raise PreconditionError(f"query sets overlap in {sorted(x & y)}", clause="disjoint")
    _check_vertices(g, x | y, "min_separator")
    if any(g.neighbors(u) & y for u in x):
        return None

    blocked = x | y
    h = nx.Graph()
    h.add_nodes_from(v for v in g.vertices if v not in blocked)
    h.add_edges_from((u, v) for u, v in g.sorted_edges() if u not in blocked and v not in blocked)
    h.add_node(_SOURCE)
    h.add_node(_SINK)
    for u in sorted(x):
        h.add_edges_from((_SOURCE, w) for w in sorted(g.neighbors(u) - blocked))
    for u in sorted(y):
        h.add_edges_from((_SINK, w) for w in sorted(g.neighbors(u) - blocked))
    return Separator(_cut_between(h))


def min_separator_unrestricted(g: Graph, x: Iterable[int], y: Iterable[int]) -> Separator:
    """Minimum S such that ``x - S`` and ``y - S`` lie in different components of ``g - S``.

    S may meet ``x`` and ``y`` (and must contain their intersection), so a
    separator always exists.
    """
    x, y = frozenset(x), frozenset(y)
    if not x or not y:
        raise PreconditionError("separator query sets must be non-empty")
    _check_vertices(g, x | y, "min_separator_unrestricted")
    h = nx.Graph(g.nx_view)
    h.add_edges_from((_SOURCE, v) for v in sorted(x))
    h.add_edges_from((_SINK, v) for v in sorted(y))
    return Separator(_cut_between(h))


def separates(g: Graph, s: Iterable[int], x: Iterable[int], y: Iterable[int]) -> bool:
    """True iff ``x - S`` and ``y - S`` meet no common component of ``g - S``."""
    s = frozenset(s)
    rest = [v for v in g.vertices if v not in s]
    x, y = frozenset(x) - s, frozenset(y) - s
    for comp in components(g, rest):
        if comp & x and comp & y:
            return False
    return True


# ----------------------------------------------------------------------
# Cliques and independence
# ----------------------------------------------------------------------


def maximum_clique(g: Graph) -> VertexSet:
    """A maximum clique; ties go to the lexicographically least sorted member list."""
    if g.n == 0:
        return frozenset()
    best = max(
        (sorted(c) for c in nx.find_cliques(g.nx_view)),
        key=lambda c: (len(c), [-v for v in c]),
    )
    return frozenset(best)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(not g.adjacent(u, v) for u, v in combinations(vs, 2))


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(g.nx_view)


def independence_implies_kl(g: Graph, k: int, *, limits: Limits | None = None) -> bool:
    """No independent k-set (and at least k vertices) forces (k, k)-connectedness.

    Vacuously true when the hypothesis fails.
    """
    if g.n < k or independence_number(g) >= k:
        return True
    return is_kl_connected(g, k, k, limits=limits)
