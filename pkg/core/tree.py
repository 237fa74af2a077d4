"""Finite rooted forests viewed as posets.

A ``Tree`` is a parent map (``-1`` marks a root) over nodes ``0..m-1`` with
cached heights. ``s < u`` in tree order iff ``s`` is a strict ancestor of ``u``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from core.config import Limits
from core.errors import PreconditionError, ResourceGuardError
from core.graph import Graph

logger = logging.getLogger(__name__)

ROOT = -1


@dataclass(frozen=True)
class Tree:
    """Rooted forest. Children of a node are kept in increasing node-id order."""

    parent: tuple[int, ...]
    heights: tuple[int, ...] = field(init=False, compare=False)
    children: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = len(self.parent)
        kids: list[list[int]] = [[] for _ in range(m)]
        for node, p in enumerate(self.parent):
            if p == ROOT:
                continue
            if not 0 <= p < m:
                raise PreconditionError(f"node {node} has parent {p} outside the tree")
            if p == node:
                raise PreconditionError(f"node {node} is its own parent", clause="acyclic")
            kids[p].append(node)

        heights: list[int | None] = [None] * m
        for node in range(m):
            path = []
            cur = node
            while heights[cur] is None and self.parent[cur] != ROOT:
                path.append(cur)
                if len(path) > m:
                    raise PreconditionError(f"parent relation has a cycle through {node}", clause="acyclic")
                cur = self.parent[cur]
            base = 0 if heights[cur] is None else heights[cur]
            if heights[cur] is None:
                heights[cur] = 0
            for offset, p in enumerate(reversed(path), start=1):
                heights[p] = base + offset
        object.__setattr__(self, "heights", tuple(heights))
        object.__setattr__(self, "children", tuple(tuple(k) for k in kids))

    @property
    def m(self) -> int:
        return len(self.parent)

    @property
    def nodes(self) -> range:
        return range(self.m)

    @property
    def roots(self) -> list[int]:
        return [t for t in self.nodes if self.parent[t] == ROOT]

    @property
    def leaves(self) -> list[int]:
        return [t for t in self.nodes if not self.children[t]]

    @property
    def height(self) -> int:
        """Length of the longest chain (0 for the empty tree)."""
        return max(self.heights, default=-1) + 1

    def ht(self, node: int) -> int:
        return self.heights[node]


@dataclass(frozen=True)
class SpecializingFunction:
    """Node labelling with colors ``0..k-1``; specializing if injective on chains."""

    labels: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        for node, label in enumerate(self.labels):
            if not 0 <= label < self.k:
                raise PreconditionError(f"label {label} of node {node} outside 0..{self.k - 1}")


def _check_nodes(t: Tree, nodes: Iterable[int]) -> None:
    for node in nodes:
        if not 0 <= node < t.m:
            raise PreconditionError(f"node {node} outside 0..{t.m - 1}")


# ----------------------------------------------------------------------
# Order relation
# ----------------------------------------------------------------------


def ancestors(t: Tree, node: int) -> list[int]:
    """Strict ancestors of ``node``, root first."""
    out = []
    cur = t.parent[node]
    while cur != ROOT:
        out.append(cur)
        cur = t.parent[cur]
    out.reverse()
    return out


def is_below(t: Tree, s: int, u: int) -> bool:
    """``s < u`` in tree order."""
    if t.heights[s] >= t.heights[u]:
        return False
    cur = u
    while t.heights[cur] > t.heights[s]:
        cur = t.parent[cur]
    return cur == s


def comparable(t: Tree, s: int, u: int) -> bool:
    return s == u or is_below(t, s, u) or is_below(t, u, s)


def subtree(t: Tree, node: int) -> list[int]:
    """``node`` and all its descendants, in preorder."""
    out = []
    stack = [node]
    while stack:
        cur = stack.pop()
        out.append(cur)
        stack.extend(reversed(t.children[cur]))
    return out


# ----------------------------------------------------------------------
# Levels, chains, antichains
# ----------------------------------------------------------------------


def levels(t: Tree) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(t.height)]
    for node in t.nodes:
        out[t.heights[node]].append(node)
    return out


def level_sizes(t: Tree) -> list[int]:
    return [len(level) for level in levels(t)]


def lower_part(t: Tree, alpha: int) -> list[int]:
    """Nodes of height below ``alpha``."""
    return [node for node in t.nodes if t.heights[node] < alpha]


def is_chain(t: Tree, nodes: Sequence[int]) -> bool:
    _check_nodes(t, nodes)
    return all(comparable(t, a, b) for a, b in combinations(nodes, 2))


def is_antichain(t: Tree, nodes: Sequence[int]) -> bool:
    _check_nodes(t, nodes)
    return all(a != b and not comparable(t, a, b) for a, b in combinations(nodes, 2))


def comparability_graph(t: Tree) -> Graph:
    """Graph on the nodes with an edge between every comparable pair."""
    edges = ((a, node) for node in t.nodes for a in ancestors(t, node))
    return Graph.from_edges(t.m, edges)


def width_and_height(t: Tree) -> tuple[int, int]:
    """(maximum antichain size, maximum chain length).

    Width is computed by Dilworth's theorem: a minimum chain cover has
    ``m - |M|`` chains for a maximum matching M in the split graph of the
    strict order.
    """
    if t.m == 0:
        return 0, 0
    split = nx.Graph()
    left = [("L", node) for node in t.nodes]
    split.add_nodes_from(left)
    split.add_nodes_from(("R", node) for node in t.nodes)
    for node in t.nodes:
        for a in ancestors(t, node):
            split.add_edge(("L", a), ("R", node))
    matching = nx.bipartite.maximum_matching(split, top_nodes=left)
    matched = sum(1 for key in matching if key[0] == "L")
    return t.m - matched, t.height


def maximum_antichain(t: Tree) -> list[int]:
    """The leaves; in a forest they form a maximum antichain."""
    return t.leaves


# ----------------------------------------------------------------------
# Branches
# ----------------------------------------------------------------------


def iter_branches(t: Tree) -> Iterator[list[int]]:
    """Maximal chains (root-to-leaf paths), one at a time, in leaf order."""
    for leaf in t.leaves:
        yield ancestors(t, leaf) + [leaf]


def branch_count(t: Tree) -> int:
    return len(t.leaves)


def branches(t: Tree, *, limits: Limits | None = None) -> list[list[int]]:
    limits = limits or Limits()
    count = branch_count(t)
    if count > limits.max_branches:
        raise ResourceGuardError("max_branches", limits.max_branches, count)
    return list(iter_branches(t))


# ----------------------------------------------------------------------
# Specializing functions and T-graphs
# ----------------------------------------------------------------------


def height_specializing(t: Tree) -> SpecializingFunction:
    """f = ht, which uses exactly ``height`` labels."""
    return SpecializingFunction(t.heights, max(t.height, 1))


def is_specializing(t: Tree, f: SpecializingFunction) -> bool:
    if len(f.labels) != t.m:
        raise PreconditionError(
            f"labelling covers {len(f.labels)} nodes, tree has {t.m}", clause="labels defined on all nodes"
        )
    for node in t.nodes:
        label = f.labels[node]
        if any(f.labels[a] == label for a in ancestors(t, node)):
            return False
    return True


def t_graph_violation(t: Tree, h: Graph) -> str | None:
    """Why ``h`` is not a T-graph over ``t``, or None if it is."""
    if h.n != t.m:
        raise PreconditionError(f"graph has {h.n} vertices, tree has {t.m} nodes", clause="same vertex set")
    for u, v in h.sorted_edges():
        if not comparable(t, u, v):
            return f"edge ({u}, {v}) joins incomparable nodes"
    for node in t.nodes:
        p = t.parent[node]
        if p != ROOT and not h.adjacent(node, p):
            return f"node {node} is not adjacent to its parent {p}"
    return None


def is_t_graph(t: Tree, h: Graph) -> bool:
    """Edges join comparable nodes and every non-root node is adjacent to its parent."""
    return t_graph_violation(t, h) is None
