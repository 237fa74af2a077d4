"""Deterministic graph and tree families, random corpora and ``gen:`` specs.

Vertex numbering per family is fixed (golden tests depend on it):

- ``apex_cliques``: vertex 0 is the apex, then one consecutive block per clique.
- ``subdivided_complete``: branch vertices ``0..k-1``, then one subdivision
  vertex per pair ``(i, j)`` in lexicographic order.
- ``complete_bipartite``: parts ``0..a-1`` and ``a..a+b-1``.

Randomness comes only from :class:`Lcg64`, so corpora are reproducible from a
seed on any platform.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import combinations

from core.errors import FormatParseError, PreconditionError
from core.graph import Graph, components
from core.tree import ROOT, Tree, comparability_graph

logger = logging.getLogger(__name__)

_MASK = (1 << 64) - 1


class Lcg64:
    """64-bit linear congruential generator (MMIX constants)."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & _MASK
        return self.state

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def randbelow(self, bound: int) -> int:
        if bound <= 0:
            raise PreconditionError(f"bound must be positive, got {bound}")
        return (self.next_u64() >> 11) % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


# ----------------------------------------------------------------------
# Graph families
# ----------------------------------------------------------------------


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise PreconditionError(f"both parts need at least one vertex, got ({a}, {b})")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def apex_cliques(sizes: Sequence[int]) -> Graph:
    """Disjoint cliques of strictly increasing sizes plus a vertex adjacent to everything."""
    if not sizes:
        raise PreconditionError("apex_cliques needs at least one clique size")
    if any(s < 1 for s in sizes) or any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise PreconditionError(f"clique sizes must be positive and strictly increasing, got {list(sizes)}")
    edges = []
    start = 1
    for size in sizes:
        block = range(start, start + size)
        edges.extend(combinations(block, 2))
        edges.extend((0, v) for v in block)
        start += size
    return Graph.from_edges(start, edges)


def subdivided_complete(k: int) -> Graph:
    """K_k with every edge subdivided once."""
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    edges = []
    for idx, (i, j) in enumerate(combinations(range(k), 2)):
        mid = k + idx
        edges.append((i, mid))
        edges.append((mid, j))
    return Graph.from_edges(k + k * (k - 1) // 2, edges)


def random_connected(n: int, edge_probability: float, seed: int) -> Graph:
    """G(n, p) made connected by adding a random spanning tree when needed."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise PreconditionError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = Lcg64(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_probability]
    g = Graph.from_edges(n, edges)
    if len(components(g)) > 1:
        order = list(range(n))
        rng.shuffle(order)
        edges.extend((order[i], order[rng.randbelow(i)]) for i in range(1, n))
        g = Graph.from_edges(n, edges)
    return g


def comparability_of(t: Tree) -> Graph:
    return comparability_graph(t)


# ----------------------------------------------------------------------
# Tree families
# ----------------------------------------------------------------------


def random_tree(nodes: int, seed: int) -> Tree:
    """Random recursive tree: node i > 0 hangs below a uniform earlier node."""
    if nodes < 1:
        raise PreconditionError(f"a tree needs at least one node, got {nodes}")
    rng = Lcg64(seed)
    return Tree((ROOT, *(rng.randbelow(i) for i in range(1, nodes))))


def chain_tree(n: int) -> Tree:
    return Tree(tuple(i - 1 if i else ROOT for i in range(n)))


def binary_tree(height: int) -> Tree:
    """Perfect binary tree with ``2**height - 1`` nodes in heap numbering."""
    return Tree(tuple((i - 1) // 2 if i else ROOT for i in range(2**height - 1)))


def broom_tree(handle: int, bristles: int) -> Tree:
    """A chain of ``handle`` nodes whose top node has ``bristles`` leaf children."""
    if handle < 1:
        raise PreconditionError(f"handle must be at least 1, got {handle}")
    parents = [i - 1 if i else ROOT for i in range(handle)]
    parents.extend(handle - 1 for _ in range(bristles))
    return Tree(tuple(parents))


# ----------------------------------------------------------------------
# Inline generator specs: gen:<family>:<params>
# ----------------------------------------------------------------------


Param = int | float


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple[Param, ...]
    seed: int | None = None

    def __str__(self) -> str:
        return f"gen:{self.family}:" + ",".join(_fmt(p) for p in self.params)


def _fmt(value: Param) -> str:
    return str(value) if isinstance(value, int) else repr(value)


def _ints(params: tuple[Param, ...], count: int | None, family: str) -> list[int]:
    if count is not None and len(params) != count:
        raise FormatParseError(f"family {family!r} takes {count} parameter(s), got {len(params)}")
    if any(isinstance(p, float) and not p.is_integer() for p in params):
        raise FormatParseError(f"family {family!r} takes integer parameters")
    return [int(p) for p in params]


def _random_connected(params: tuple[Param, ...]) -> Graph:
    if len(params) != 3:
        raise FormatParseError("random-connected takes n,p,seed")
    n, p, seed = params
    n, seed = _ints((n, seed), 2, "random-connected")
    return random_connected(n, float(p), seed)


def _comparability_random_tree(params: tuple[Param, ...]) -> Graph:
    nodes, seed = _ints(params, 2, "comparability-random-tree")
    return comparability_of(random_tree(nodes, seed))


FAMILIES: dict[str, Callable[[tuple[Param, ...]], Graph]] = {
    "path": lambda ps: path(*_ints(ps, 1, "path")),
    "cycle": lambda ps: cycle(*_ints(ps, 1, "cycle")),
    "complete": lambda ps: complete(*_ints(ps, 1, "complete")),
    "star": lambda ps: star(*_ints(ps, 1, "star")),
    "complete-bipartite": lambda ps: complete_bipartite(*_ints(ps, 2, "complete-bipartite")),
    "apex-cliques": lambda ps: apex_cliques(_ints(ps, None, "apex-cliques")),
    "subdivided-complete": lambda ps: subdivided_complete(*_ints(ps, 1, "subdivided-complete")),
    "random-connected": _random_connected,
    "comparability-random-tree": _comparability_random_tree,
}


def _param(token: str) -> Param:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise FormatParseError(f"generator parameter {token!r} is not a number") from None


def parse_generator_spec(text: str) -> GeneratorSpec:
    """Parse ``gen:<family>:<p1>,<p2>,...`` (the ``gen:`` prefix is optional).

    Integer tokens are parsed exactly; other numbers as floats.
    """
    body = text.strip()
    if body.startswith("gen:"):
        body = body[4:]
    family, _, raw = body.partition(":")
    if family not in FAMILIES:
        raise FormatParseError(f"unknown generator family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    params = tuple(_param(token) for token in filter(None, (p.strip() for p in raw.split(","))))
    seed = int(params[-1]) if family in ("random-connected", "comparability-random-tree") and params else None
    return GeneratorSpec(family, params, seed)


def build(spec: GeneratorSpec) -> Graph:
    g = FAMILIES[spec.family](spec.params)
    logger.info("Generated %s: n=%d, m=%d", spec, g.n, g.edge_count)
    return g


def generate(text: str) -> Graph:
    return build(parse_generator_spec(text))
