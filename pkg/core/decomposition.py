"""Tree decomposition T_G of a finite graph.

The construction works level by level. A root is placed on the least vertex of
every component, with that component as its cone. A node ``t`` with cone
``C_t`` and vertex ``x_t`` gets one child per component ``C`` of
``C_t - {x_t}``. The child's vertex is a neighbour of ``x_t`` in ``C`` that is
nearest (inside ``C``) to the least vertex of ``C``, ties to the least id.

Every node carries exactly one vertex, so the tree is also a partition of V
into singletons, and contracting along it gives a T-graph.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from core.coloring import Coloring
from core.config import Limits
from core.errors import PreconditionError
from core.graph import Graph, VertexSet, components, distances_from, is_connected, is_independent
from core.graph import is_kl_connected, quotient
from core.minors import MinorWitness, verify_minor
from core.tree import ROOT, SpecializingFunction, Tree, comparable, is_antichain, is_below, is_specializing
from core.tree import levels, t_graph_violation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """Output of :func:`decompose`; nodes are numbered in construction order."""

    tree: Tree
    branch_vertex: tuple[int, ...]
    cone: tuple[VertexSet, ...]
    f_edges: frozenset[tuple[int, int]]
    node_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = self.tree.m
        if len(self.branch_vertex) != m or len(self.cone) != m:
            raise PreconditionError(
                f"decomposition has {m} nodes but {len(self.branch_vertex)} vertices "
                f"and {len(self.cone)} cones",
                clause="consistent vertex universe",
            )
        node_of = [-1] * m
        for node, v in enumerate(self.branch_vertex):
            if 0 <= v < m and node_of[v] == -1:
                node_of[v] = node
        object.__setattr__(self, "node_of", tuple(node_of))

    @property
    def height(self) -> int:
        return self.tree.height

    @property
    def is_chain(self) -> bool:
        return all(len(kids) <= 1 for kids in self.tree.children) and len(self.tree.roots) <= 1

    def level_sizes(self) -> list[int]:
        return [len(level) for level in levels(self.tree)]

    def node_of_vertex(self, v: int) -> int:
        if not 0 <= v < len(self.node_of) or self.node_of[v] == -1:
            raise PreconditionError(f"vertex {v} is not carried by any node")
        return self.node_of[v]

    def underlying_graph(self) -> Graph:
        """The decomposed graph, recovered through the vertex/node bijection."""
        return Graph.from_edges(
            self.tree.m, ((self.branch_vertex[a], self.branch_vertex[b]) for a, b in self.f_edges)
        )


def _transport_edges(g: Graph, node_of: Sequence[int]) -> frozenset[tuple[int, int]]:
    edges = set()
    for u, v in g.edges:
        a, b = node_of[u], node_of[v]
        edges.add((a, b) if a < b else (b, a))
    return frozenset(edges)


def choose_successor(g: Graph, cone: VertexSet, anchor: int) -> int:
    """Vertex of ``cone`` adjacent to ``anchor`` nearest to ``min(cone)``, least id on ties."""
    dist = distances_from(g, cone, min(cone))
    candidates = [v for v in cone if g.adjacent(v, anchor)]
    if not candidates:
        raise PreconditionError(f"cone {sorted(cone)} has no neighbour of vertex {anchor}")
    return min(candidates, key=lambda v: (dist.get(v, math.inf), v))


def decompose(g: Graph) -> Decomposition:
    """Build T_G. Disconnected graphs give one root per component."""
    parent: list[int] = []
    vertex: list[int] = []
    cones: list[VertexSet] = []

    def add(p: int, x: int, cone: VertexSet) -> int:
        parent.append(p)
        vertex.append(x)
        cones.append(cone)
        return len(parent) - 1

    level = [add(ROOT, min(comp), comp) for comp in components(g)]
    while level:
        next_level = []
        for t in level:
            rest = cones[t] - {vertex[t]}
            if not rest:
                continue
            for comp in components(g, rest):
                next_level.append(add(t, choose_successor(g, comp, vertex[t]), comp))
        level = next_level

    node_of = [0] * g.n
    for node, v in enumerate(vertex):
        node_of[v] = node
    tree = Tree(tuple(parent))
    logger.info("Decomposed graph with n=%d into tree of height %d", g.n, tree.height)
    return Decomposition(tree, tuple(vertex), tuple(cones), _transport_edges(g, node_of))


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class DecompositionReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _first(problems: list[str]) -> tuple[bool, str]:
    return (not problems, problems[0] if problems else "")


def verify_decomposition(g: Graph, d: Decomposition) -> DecompositionReport:
    """Check every structural property of a decomposition against ``g``."""
    t = d.tree
    if t.m != g.n:
        raise PreconditionError(
            f"decomposition has {t.m} nodes, graph has {g.n} vertices", clause="consistent vertex universe"
        )
    for node, cone in enumerate(d.cone):
        if any(not 0 <= v < g.n for v in cone) or not 0 <= d.branch_vertex[node] < g.n:
            raise PreconditionError(f"node {node} refers to vertices outside the graph",
                                    clause="consistent vertex universe")
    for a, b in d.f_edges:
        if not (0 <= a < t.m and 0 <= b < t.m):
            raise PreconditionError(f"F-edge ({a}, {b}) refers to nodes outside the tree",
                                    clause="consistent vertex universe")

    results: list[CheckResult] = []

    def record(name: str, problems: list[str]) -> None:
        ok, detail = _first(problems)
        results.append(CheckResult(name, ok, detail))

    bijective = sorted(d.branch_vertex) == list(range(g.n))
    record("partition", [] if bijective else ["branch vertices are not a bijection onto V"])

    record("vertex-in-cone", [
        f"node {node}: vertex {d.branch_vertex[node]} not in its cone"
        for node in t.nodes if d.branch_vertex[node] not in d.cone[node]
    ])
    record("cone-connected", [
        f"node {node}: cone does not induce a connected subgraph"
        for node in t.nodes if not is_connected(g, d.cone[node])
    ])

    comps = set(components(g))
    record("root-cones", [f"root {r}: cone is not a component" for r in t.roots if d.cone[r] not in comps])

    child_problems = []
    for node in t.nodes:
        expected = components(g, d.cone[node] - {d.branch_vertex[node]})
        actual = [d.cone[c] for c in t.children[node]]
        if actual != expected:
            child_problems.append(f"node {node}: child cones differ from components of C_t - V_t")
    record("child-cones-are-components", child_problems)

    nesting_problems = []
    for s in t.nodes:
        for u in t.nodes:
            if s != u and is_below(t, s, u) != (d.cone[u] < d.cone[s]):
                nesting_problems.append(f"nodes {s}, {u}: tree order disagrees with cone inclusion")
    record("nesting", nesting_problems)

    successor_problems = []
    for node in t.nodes:
        p = t.parent[node]
        cone = d.cone[node]
        if p == ROOT:
            if not cone or d.branch_vertex[node] != min(cone):
                successor_problems.append(f"root {node}: vertex is not the least of its component")
            continue
        if d.branch_vertex[node] not in cone or not any(g.adjacent(v, d.branch_vertex[p]) for v in cone):
            successor_problems.append(f"node {node}: no admissible successor vertex")
            continue
        if not is_connected(g, cone):
            successor_problems.append(f"node {node}: cone is disconnected, so no nearest vertex is defined")
            continue
        if choose_successor(g, cone, d.branch_vertex[p]) != d.branch_vertex[node]:
            successor_problems.append(f"node {node}: vertex is not the nearest neighbour of its parent's vertex")
    record("successor-rule", successor_problems)

    if bijective:
        expected_f = _transport_edges(g, d.node_of)
        f_problems = [] if d.f_edges == expected_f else ["F differs from the edge relation carried over to nodes"]
    else:
        f_problems = ["skipped: partition is not a bijection"]
    record("f-edges", f_problems)

    record("comparability-subgraph", [
        f"F-edge ({a}, {b}) joins incomparable nodes" for a, b in sorted(d.f_edges) if not comparable(t, a, b)
    ])

    f_graph = Graph.from_edges(t.m, d.f_edges)
    violation = t_graph_violation(t, f_graph)
    record("t-graph", [violation] if violation else [])

    if bijective:
        q = quotient(g, [frozenset({d.branch_vertex[node]}) for node in t.nodes])
        carried = {tuple(sorted((d.branch_vertex[a], d.branch_vertex[b]))) for a, b in q.edges}
        q_problems = [] if carried == set(g.edges) else ["quotient by singleton blocks is not a copy of G"]
    else:
        q_problems = ["skipped: partition is not a bijection"]
    record("quotient", q_problems)

    level_problems = []
    consumed: set[int] = set()
    for alpha, level in enumerate(levels(t)):
        expected = set(components(g, [v for v in g.vertices if v not in consumed]))
        if {d.cone[node] for node in level} != expected:
            level_problems.append(f"level {alpha}: cones are not the components left after lower levels")
        consumed.update(d.branch_vertex[node] for node in level)
    record("levels-are-components", level_problems)

    report = DecompositionReport(tuple(results))
    if not report.passed:
        logger.info("Decomposition check failed: %s", ", ".join(c.name for c in report.failed()))
    return report


def consumption_check(g: Graph, d: Decomposition) -> list[str]:
    """Least-vertex consumption along the construction trace.

    For every node t, the least vertex y of its cone is carried by t or a
    descendant of t at height at most ``ht(t) + dist(x_t, y)`` (distance inside
    the cone). Returns the violations; empty means the trace is sound.
    Decompositions that do not carry every vertex exactly once are reported,
    not traced.
    """
    t = d.tree
    if sorted(d.branch_vertex) != list(range(g.n)) or t.m != g.n:
        return ["skipped: partition is not a bijection"]
    problems = []
    for node in t.nodes:
        cone = d.cone[node]
        if d.branch_vertex[node] not in cone:
            problems.append(f"node {node}: vertex {d.branch_vertex[node]} not in its cone")
            continue
        y = min(cone)
        dist = distances_from(g, cone, d.branch_vertex[node]).get(y)
        if dist is None:
            problems.append(f"node {node}: least vertex {y} unreachable inside the cone")
            continue
        carrier = d.node_of[y]
        if carrier != node and not is_below(t, node, carrier):
            problems.append(f"node {node}: least vertex {y} is carried outside its subtree")
        elif t.heights[carrier] > t.heights[node] + dist:
            problems.append(
                f"node {node}: least vertex {y} consumed at height {t.heights[carrier]}, "
                f"bound is {t.heights[node] + dist}"
            )
    return problems


@dataclass(frozen=True)
class LevelWidth:
    level: int
    below: int
    size: int
    applies: bool
    holds: bool


@dataclass(frozen=True)
class LevelWidthReport:
    k: int
    l: int
    kl_connected: bool
    levels: tuple[LevelWidth, ...]

    @property
    def passed(self) -> bool:
        return all(level.holds for level in self.levels)


def level_width_check(g: Graph, d: Decomposition, k: int, l: int, *, limits: Limits | None = None) -> LevelWidthReport:
    """A (k, l)-connected graph has fewer than ``l`` nodes on every level with fewer than ``k`` vertices below it."""
    connected = is_kl_connected(g, k, l, limits=limits)
    rows = []
    below = 0
    for alpha, level in enumerate(levels(d.tree)):
        applies = below < k
        holds = not (connected and applies) or len(level) < l
        rows.append(LevelWidth(alpha, below, len(level), applies, holds))
        below += len(level)
    return LevelWidthReport(k, l, connected, tuple(rows))


# ----------------------------------------------------------------------
# Colorings
# ----------------------------------------------------------------------


def level_coloring(d: Decomposition) -> Coloring:
    """Color each vertex by the height of the node carrying it."""
    return Coloring(tuple(d.tree.heights[d.node_of[v]] for v in range(d.tree.m)))


@dataclass(frozen=True)
class TreePartition:
    """A tree whose nodes carry pairwise disjoint connected vertex blocks."""

    tree: Tree
    blocks: tuple[VertexSet, ...]


def tree_partition_violation(g: Graph, p: TreePartition) -> tuple[str, str] | None:
    """(clause, detail) for the first violated partition condition, or None."""
    t = p.tree
    if len(p.blocks) != t.m:
        return "one block per node", f"{len(p.blocks)} blocks for {t.m} nodes"
    owner: dict[int, int] = {}
    for node, block in enumerate(p.blocks):
        if not block:
            return "non-empty", f"block of node {node} is empty"
        for v in block:
            if not 0 <= v < g.n:
                return "within the graph", f"block of node {node} contains vertex {v}"
            if v in owner:
                return "pairwise disjoint", f"vertex {v} lies in blocks {owner[v]} and {node}"
            owner[v] = node
    if len(owner) != g.n:
        missing = sorted(set(g.vertices) - owner.keys())
        return "covering", f"vertices {missing} are in no block"
    for node, block in enumerate(p.blocks):
        if not is_connected(g, block):
            return "connected blocks", f"block of node {node} is not connected"
    for u, v in g.sorted_edges():
        a, b = owner[u], owner[v]
        if a != b and not comparable(t, a, b):
            return "edges join comparable blocks", f"edge ({u}, {v}) joins blocks of incomparable nodes {a}, {b}"
    for node in t.nodes:
        par = t.parent[node]
        if par != ROOT and not any(g.neighbors(v) & p.blocks[par] for v in p.blocks[node]):
            return "attached to parent", f"block of node {node} has no edge to its parent's block"
    return None


def verify_tree_partition(g: Graph, p: TreePartition) -> CheckResult:
    violation = tree_partition_violation(g, p)
    if violation is None:
        return CheckResult("tree-partition", True)
    clause, detail = violation
    return CheckResult("tree-partition", False, f"{clause}: {detail}")


def coloring_from_specializing(g: Graph, p: TreePartition, f: SpecializingFunction) -> Coloring:
    """Color v in the block of t by ``f(t) * B + rank of v in its block`` (B = largest block)."""
    violation = tree_partition_violation(g, p)
    if violation is not None:
        clause, detail = violation
        raise PreconditionError(f"invalid tree partition: {detail}", clause=clause)
    if not is_specializing(p.tree, f):
        raise PreconditionError("labelling is not injective on chains", clause="specializing")
    width = max((len(b) for b in p.blocks), default=0)
    colors = [0] * g.n
    for node, block in enumerate(p.blocks):
        for rank, v in enumerate(sorted(block)):
            colors[v] = f.labels[node] * width + rank
    return Coloring(tuple(colors))


def singleton_partition(d: Decomposition) -> TreePartition:
    return TreePartition(d.tree, tuple(frozenset({v}) for v in d.branch_vertex))


# ----------------------------------------------------------------------
# Minors and antichains
# ----------------------------------------------------------------------


def chain_from_minor(d: Decomposition, w: MinorWitness) -> list[int]:
    """For each branch set, the least node carrying one of its vertices; sorted by height.

    The nodes are pairwise comparable and distinct, so a K_k minor yields a
    chain of length k.
    """
    check = verify_minor(d.underlying_graph(), w)
    if not check.valid:
        raise PreconditionError(f"invalid minor witness: {check.reason}", clause="valid witness")
    chain = []
    for i, block in enumerate(w.branch_sets):
        nodes = {d.node_of_vertex(v) for v in block}
        least = min(nodes, key=lambda node: d.tree.heights[node])
        if any(node != least and not is_below(d.tree, least, node) for node in nodes):
            raise PreconditionError(f"branch set {i} has no least node", clause="connected branch set")
        chain.append(least)
    chain.sort(key=lambda node: d.tree.heights[node])
    return chain


def independent_from_antichain(d: Decomposition, antichain: Sequence[int]) -> VertexSet:
    """Vertices carried by an antichain; independent in the decomposed graph."""
    if not is_antichain(d.tree, antichain):
        raise PreconditionError("nodes do not form an antichain", clause="antichain")
    return frozenset(d.branch_vertex[node] for node in antichain)


def maximal_antichains_through_levels(d: Decomposition) -> list[list[int]]:
    """Every level and the leaf set; each is an antichain."""
    out = [list(level) for level in levels(d.tree)]
    out.append(d.tree.leaves)
    return out


def check_antichains_independent(g: Graph, d: Decomposition) -> list[str]:
    problems = []
    for antichain in maximal_antichains_through_levels(d):
        if antichain and not is_independent(g, independent_from_antichain(d, antichain)):
            problems.append(f"antichain {antichain} maps to a non-independent set")
    return problems
