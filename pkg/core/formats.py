"""Plain-text formats: edge lists, trees, tree partitions and DOT export.

Edge list::

    # comment
    n 4          (optional header, first non-comment line)
    0 1
    1 2

Without a header the vertex count is the largest index plus one.

Tree: one line per node, ``node parent height`` (roots have parent -1).
Tree partition: one line per node, ``node parent v1 v2 ...``.
"""

from __future__ import annotations

import logging
from pathlib import Path

from core.decomposition import Decomposition, TreePartition
from core.errors import FormatParseError, PreconditionError
from core.generators import generate
from core.graph import Graph
from core.tree import ROOT, Tree

logger = logging.getLogger(__name__)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatParseError(f"{what} {token!r} is not an integer", line=number) from None


# ----------------------------------------------------------------------
# Edge lists
# ----------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    first = True
    for number, line in _content_lines(text):
        tokens = line.split()
        if first and tokens[0] == "n":
            first = False
            if len(tokens) != 2:
                raise FormatParseError("header must be 'n <count>'", line=number)
            declared = _int(tokens[1], number, "vertex count")
            if declared < 0:
                raise FormatParseError("vertex count must be non-negative", line=number)
            continue
        first = False
        if len(tokens) != 2:
            raise FormatParseError(f"expected two vertex ids, got {len(tokens)} token(s)", line=number)
        u, v = (_int(tok, number, "vertex id") for tok in tokens)
        if u < 0 or v < 0:
            raise FormatParseError("vertex ids must be non-negative", line=number)
        if u == v:
            raise FormatParseError(f"self-loop at vertex {u}", line=number)
        if declared is not None and max(u, v) >= declared:
            raise FormatParseError(f"vertex {max(u, v)} exceeds header count {declared}", line=number)
        edges.append((u, v))
    n = declared if declared is not None else max((max(e) for e in edges), default=-1) + 1
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def load_graph(source: str) -> Graph:
    """A ``gen:`` spec, or a path to an edge-list file."""
    if source.startswith("gen:"):
        return generate(source)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatParseError(f"cannot read {source}: {exc.strerror or exc}") from None
    logger.info("Reading edge list from %s", path)
    return parse_edge_list(text)


def parse_vertex_set(text: str) -> frozenset[int]:
    """``"0,2 5"`` -> ``{0, 2, 5}``; commas and whitespace both separate."""
    tokens = text.replace(",", " ").split()
    return frozenset(_int(tok, 1, "vertex id") for tok in tokens)


def graph_from_text(source: str) -> Graph:
    """A ``gen:`` spec, or inline edge-list text."""
    if source.strip().startswith("gen:"):
        return generate(source.strip())
    return parse_edge_list(source)


# ----------------------------------------------------------------------
# Trees and tree partitions
# ----------------------------------------------------------------------


def _parents_by_node(rows: dict[int, int], number_of: dict[int, int]) -> tuple[int, ...]:
    m = len(rows)
    if sorted(rows) != list(range(m)):
        missing = sorted(set(range(m)) - rows.keys())
        raise FormatParseError(f"nodes must be numbered 0..{m - 1}; missing {missing}")
    for node, parent in rows.items():
        if parent != ROOT and not 0 <= parent < m:
            raise FormatParseError(f"parent {parent} of node {node} is not a node", line=number_of[node])
    return tuple(rows[node] for node in range(m))


def parse_tree(text: str) -> Tree:
    rows: dict[int, int] = {}
    heights: dict[int, int] = {}
    number_of: dict[int, int] = {}
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 3:
            raise FormatParseError("expected 'node parent height'", line=number)
        node, parent, height = (_int(tok, number, "field") for tok in tokens)
        if node in rows:
            raise FormatParseError(f"node {node} listed twice", line=number)
        rows[node], heights[node], number_of[node] = parent, height, number
    try:
        tree = Tree(_parents_by_node(rows, number_of))
    except PreconditionError as exc:
        raise FormatParseError(str(exc)) from None
    for node, height in heights.items():
        if tree.heights[node] != height:
            raise FormatParseError(
                f"node {node} declares height {height}, actual {tree.heights[node]}", line=number_of[node]
            )
    return tree


def format_tree(t: Tree) -> str:
    return "".join(f"{node} {t.parent[node]} {t.heights[node]}\n" for node in t.nodes)


def parse_tree_partition(text: str) -> TreePartition:
    rows: dict[int, int] = {}
    blocks: dict[int, frozenset[int]] = {}
    number_of: dict[int, int] = {}
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) < 3:
            raise FormatParseError("expected 'node parent v1 v2 ...'", line=number)
        node, parent, *vertices = (_int(tok, number, "field") for tok in tokens)
        if node in rows:
            raise FormatParseError(f"node {node} listed twice", line=number)
        rows[node], blocks[node], number_of[node] = parent, frozenset(vertices), number
    try:
        tree = Tree(_parents_by_node(rows, number_of))
    except PreconditionError as exc:
        raise FormatParseError(str(exc)) from None
    return TreePartition(tree, tuple(blocks[node] for node in tree.nodes))


# ----------------------------------------------------------------------
# DOT
# ----------------------------------------------------------------------


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(t: Tree, name: str = "T", labels: dict[int, str] | None = None) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for node in t.nodes:
        label = labels.get(node, str(node)) if labels else str(node)
        lines.append(f'  {node} [label="{label}"];')
    lines.extend(f"  {node} -> {t.parent[node]};" for node in t.nodes if t.parent[node] != ROOT)
    lines.append("}")
    return "\n".join(lines) + "\n"


def decomposition_to_dot(d: Decomposition, name: str = "TG") -> str:
    """Tree edges solid, remaining F-edges dashed; nodes labelled ``node:vertex``."""
    t = d.tree
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for node in t.nodes:
        lines.append(f'  {node} [label="{node}:{d.branch_vertex[node]}"];')
    lines.extend(f"  {node} -> {t.parent[node]};" for node in t.nodes if t.parent[node] != ROOT)
    tree_pairs = {tuple(sorted((node, t.parent[node]))) for node in t.nodes if t.parent[node] != ROOT}
    for a, b in sorted(d.f_edges - tree_pairs):
        lines.append(f"  {b} -> {a} [style=dashed, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
