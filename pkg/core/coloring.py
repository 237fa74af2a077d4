"""Proper colorings: validation, DSATUR, exact chromatic number, part combining."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from core.config import Limits
from core.errors import PreconditionError, ResourceGuardError
from core.graph import Graph, VertexSet, induced, maximum_clique

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    """``colors[v]`` is the color of vertex v."""

    colors: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(set(self.colors))

    def canonical(self) -> Coloring:
        """Renumber colors by first occurrence (vertex order)."""
        mapping: dict[int, int] = {}
        for c in self.colors:
            mapping.setdefault(c, len(mapping))
        return Coloring(tuple(mapping[c] for c in self.colors))

    def classes(self) -> list[list[int]]:
        canon = self.canonical()
        out: list[list[int]] = [[] for _ in range(canon.count)]
        for v, c in enumerate(canon.colors):
            out[c].append(v)
        return out


def monochromatic_edge(g: Graph, c: Coloring) -> tuple[int, int] | None:
    if len(c.colors) != g.n:
        raise PreconditionError(
            f"coloring covers {len(c.colors)} vertices, graph has {g.n}", clause="total coloring"
        )
    for u, v in g.sorted_edges():
        if c.colors[u] == c.colors[v]:
            return (u, v)
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    """No edge has both ends the same color."""
    return monochromatic_edge(g, c) is None


def dsatur_bound(g: Graph) -> Coloring:
    """DSATUR: repeatedly color the most saturated vertex (ties: degree, then least id)."""
    colors: dict[int, int] = {}
    neighbor_colors: dict[int, set[int]] = {v: set() for v in g.vertices}
    for _ in range(g.n):
        best = min(
            (v for v in g.vertices if v not in colors),
            key=lambda v: (-len(neighbor_colors[v]), -g.degree(v), v),
        )
        c = 0
        while c in neighbor_colors[best]:
            c += 1
        colors[best] = c
        for w in g.neighbors(best):
            if w not in colors:
                neighbor_colors[w].add(c)
    return Coloring(tuple(colors[v] for v in g.vertices))


def _try_color(g: Graph, k: int, seed: Sequence[int]) -> list[int] | None:
    """Backtracking k-coloring with the clique ``seed`` precolored 0..|seed|-1."""
    colors = [-1] * g.n
    for i, v in enumerate(seed):
        colors[v] = i
    # saturation[v][c] counts colored neighbours of v holding color c
    saturation = [[0] * k for _ in g.vertices]
    for v in seed:
        for w in g.neighbors(v):
            saturation[w][colors[v]] += 1
    remaining = g.n - len(seed)
    nodes = 0

    def pick() -> int:
        best, best_key = -1, None
        for v in g.vertices:
            if colors[v] != -1:
                continue
            sat = sum(1 for count in saturation[v] if count)
            key = (-sat, -g.degree(v), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for w in g.neighbors(v):
            saturation[w][c] += delta

    def solve(left: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if left == 0:
            return True
        v = pick()
        # a fresh color is interchangeable with any other unused one
        for c in range(min(k, used + 1)):
            if saturation[v][c]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if solve(left - 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    found = solve(remaining, len(seed))
    logger.debug("k=%d coloring search visited %d nodes (found=%s)", k, nodes, found)
    return colors if found else None


def chromatic_bounds(g: Graph) -> tuple[int, int, Coloring]:
    """(clique lower bound, DSATUR upper bound, DSATUR coloring); no guard."""
    upper = dsatur_bound(g)
    return len(maximum_clique(g)), upper.count, upper


def chromatic_number(g: Graph, *, limits: Limits | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a witnessing coloring using exactly that many colors."""
    limits = limits or Limits()
    if g.n > limits.max_exact_chromatic:
        raise ResourceGuardError("max_exact_chromatic", limits.max_exact_chromatic, g.n)
    if g.n == 0:
        return 0, Coloring(())
    clique = sorted(maximum_clique(g))
    upper = dsatur_bound(g)
    for k in range(len(clique), upper.count):
        found = _try_color(g, k, clique)
        if found is not None:
            return k, Coloring(tuple(found)).canonical()
    return upper.count, upper.canonical()


def combine_part_colorings(
    g: Graph, parts: Sequence[VertexSet], colorings: Sequence[Coloring]
) -> Coloring:
    """Pair-code colorings of a partition: v in part i with inner color c gets ``i * K + c``.

    ``colorings[i]`` colors the subgraph induced by ``parts[i]``, indexed by the
    part's vertices in increasing order. K is the largest inner color count
    after canonical renumbering.
    """
    if len(parts) != len(colorings):
        raise PreconditionError(f"{len(parts)} parts but {len(colorings)} colorings")
    seen: set[int] = set()
    for i, part in enumerate(parts):
        if not part:
            raise PreconditionError(f"part {i} is empty", clause="partition")
        if seen & part:
            raise PreconditionError(f"part {i} overlaps an earlier part", clause="partition")
        seen |= part
    if seen != set(g.vertices):
        raise PreconditionError("parts do not cover the vertex set", clause="partition")

    inner = []
    for i, (part, coloring) in enumerate(zip(parts, colorings)):
        sub, _ = induced(g, part)
        if len(coloring.colors) != sub.n or not is_proper(sub, coloring):
            raise PreconditionError(f"coloring {i} is not proper on its part", clause="proper inner coloring")
        inner.append(coloring.canonical())

    width = max((c.count for c in inner), default=0)
    colors = [0] * g.n
    for i, (part, coloring) in enumerate(zip(parts, inner)):
        for v, c in zip(sorted(part), coloring.colors):
            colors[v] = i * width + c
    return Coloring(tuple(colors))
