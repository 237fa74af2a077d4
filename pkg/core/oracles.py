"""Definitional brute-force references for small graphs.

These share no search code with the solvers they cross-check: every answer is
read off a plain enumeration of assignments, partitions or subsets. They are
exponential and meant for n <= 8.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, product

from core.graph import Graph
from core.tree import Tree, comparable


def _connected(g: Graph, block: list[int]) -> bool:
    if not block:
        return False
    inside = set(block)
    seen = {block[0]}
    stack = [block[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == inside


def _touch(g: Graph, a: list[int], b: list[int]) -> bool:
    return any(g.adjacent(u, v) for u in a for v in b)


def _component_count(g: Graph, alive: list[int]) -> int:
    left = set(alive)
    count = 0
    while left:
        count += 1
        stack = [left.pop()]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in left:
                    left.remove(w)
                    stack.append(w)
    return count


def set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted-growth strings of length n (every set partition of range(n))."""
    if n == 0:
        yield []
        return
    word = [0] * n

    def grow(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield list(word)
            return
        for label in range(top + 2):
            word[i] = label
            yield from grow(i + 1, max(top, label))

    word[0] = 0
    yield from grow(1, 0)


def _branch_systems(g: Graph) -> Iterator[list[list[int]]]:
    """All partial partitions of V: an extra element marks the discarded vertices."""
    for word in set_partitions(g.n + 1):
        discard = word[g.n]
        blocks: dict[int, list[int]] = {}
        for v in g.vertices:
            if word[v] != discard:
                blocks.setdefault(word[v], []).append(v)
        yield list(blocks.values())


def _is_clique_model(g: Graph, blocks: list[list[int]]) -> bool:
    return all(_connected(g, b) for b in blocks) and all(_touch(g, a, b) for a, b in combinations(blocks, 2))


def has_clique_minor(g: Graph, k: int) -> bool:
    return any(len(blocks) == k and _is_clique_model(g, blocks) for blocks in _branch_systems(g))


def hadwiger_number(g: Graph) -> int:
    return max((len(blocks) for blocks in _branch_systems(g) if _is_clique_model(g, blocks)), default=0)


def chromatic_number(g: Graph) -> int:
    for k in range(g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return k
    return g.n


def min_separator_size(g: Graph, x: set[int], y: set[int]) -> int | None:
    """Size of a smallest S outside x and y leaving no x-y path; None when x touches y."""
    if any(g.adjacent(u, v) for u in x for v in y):
        return None
    candidates = [v for v in g.vertices if v not in x and v not in y]
    for size in range(len(candidates) + 1):
        for s in combinations(candidates, size):
            alive = set(g.vertices) - set(s)
            reach = set(x)
            stack = list(x)
            while stack:
                v = stack.pop()
                for w in g.neighbors(v):
                    if w in alive and w not in reach:
                        reach.add(w)
                        stack.append(w)
            if not reach & y:
                return size
    return None


def is_k_connected(g: Graph, k: int) -> bool:
    for size in range(min(k, g.n + 1)):
        for s in combinations(g.vertices, size):
            alive = [v for v in g.vertices if v not in s]
            if _component_count(g, alive) != 1:
                return False
    return g.n >= k


def is_kl_connected(g: Graph, k: int, l: int) -> bool:
    """Walks removal sets as bitmasks from the full set downwards."""
    for mask in range((1 << g.n) - 1, -1, -1):
        if mask.bit_count() >= k:
            continue
        alive = [v for v in g.vertices if not mask >> v & 1]
        count = _component_count(g, alive)
        if count < 1 or count >= l:
            return False
    return True


def independence_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        for s in combinations(g.vertices, size):
            if not any(g.adjacent(u, v) for u, v in combinations(s, 2)):
                return size
    return 0


def tree_width(t: Tree) -> int:
    """Largest antichain, by subset enumeration."""
    for size in range(t.m, 0, -1):
        for s in combinations(t.nodes, size):
            if not any(comparable(t, a, b) for a, b in combinations(s, 2)):
                return size
    return 0
