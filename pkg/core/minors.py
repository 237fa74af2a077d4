"""Clique minors, subdivisions and Kurepa minor families.

``find_clique_minor`` is an exact backtracking search: vertices are visited in
BFS order from a highest-degree vertex and each one either joins an existing
branch set, opens the next branch set, or stays unused. Partial states whose
branch sets can no longer be completed to connected, pairwise touching sets
are pruned.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, isqrt
from typing import TYPE_CHECKING

from core.config import Limits
from core.errors import PreconditionError, ResourceGuardError
from core.graph import Graph, VertexSet, components, is_connected, maximum_clique
from core.graph import min_separator, min_separator_unrestricted

if TYPE_CHECKING:
    from core.decomposition import Decomposition
    from core.tree import Tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorWitness:
    """``branch_sets[i]`` is contracted to vertex i of K_k."""

    k: int
    branch_sets: tuple[VertexSet, ...]

    @classmethod
    def of(cls, branch_sets: Iterable[Iterable[int]]) -> MinorWitness:
        sets = tuple(frozenset(s) for s in branch_sets)
        return cls(len(sets), sets)

    def normalized(self) -> MinorWitness:
        return MinorWitness(self.k, tuple(sorted(self.branch_sets, key=lambda s: min(s) if s else -1)))

    def union(self) -> VertexSet:
        return frozenset().union(*self.branch_sets)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validation; ``reason`` names the first violated clause."""

    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def verify_minor(g: Graph, w: MinorWitness) -> Verdict:
    if len(w.branch_sets) != w.k:
        return Verdict(False, f"witness claims k={w.k} but has {len(w.branch_sets)} branch sets")
    for i, s in enumerate(w.branch_sets):
        if not s:
            return Verdict(False, f"branch set {i} is empty")
        bad = [v for v in s if not 0 <= v < g.n]
        if bad:
            return Verdict(False, f"branch set {i} has vertex {bad[0]} outside the graph")
    for i, j in combinations(range(w.k), 2):
        if w.branch_sets[i] & w.branch_sets[j]:
            return Verdict(False, f"branch sets {i} and {j} overlap")
    for i, s in enumerate(w.branch_sets):
        if not is_connected(g, s):
            return Verdict(False, f"branch set {i} is not connected")
    for i, j in combinations(range(w.k), 2):
        if not any(g.neighbors(v) & w.branch_sets[j] for v in w.branch_sets[i]):
            return Verdict(False, f"branch sets {i} and {j} are not joined by an edge")
    return Verdict(True)


# ----------------------------------------------------------------------
# Exact clique minor search
# ----------------------------------------------------------------------


def _bfs_order(g: Graph, comp: VertexSet) -> list[int]:
    start = min(comp, key=lambda v: (-g.degree(v), v))
    order, seen = [start], {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


class _MinorSearch:
    def __init__(self, g: Graph, comp: VertexSet, k: int) -> None:
        self.g = g
        self.k = k
        self.order = _bfs_order(g, comp)
        self.sets: list[set[int]] = []
        self.nodes = 0

    def _region(self, s: set[int], free: set[int]) -> set[int] | None:
        """Vertices reachable from ``s`` through free vertices, or None if s cannot become connected."""
        start = next(iter(s))
        seen = {start}
        queue = deque([start])
        allowed = s | free
        while queue:
            v = queue.popleft()
            for w in self.g.neighbors(v):
                if w in allowed and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen if s <= seen else None

    def _feasible(self, i: int) -> bool:
        free = set(self.order[i:])
        if len(self.sets) + len(free) < self.k:
            return False
        regions = []
        for s in self.sets:
            region = self._region(s, free)
            if region is None:
                return False
            regions.append(region)
        for a, b in combinations(range(len(self.sets)), 2):
            ra, rb = regions[a], regions[b]
            if ra & rb & free:
                continue
            if not any(self.g.neighbors(v) & rb for v in ra):
                return False
        return True

    def _complete(self) -> bool:
        if len(self.sets) != self.k:
            return False
        if any(not is_connected(self.g, s) for s in self.sets):
            return False
        return all(
            any(self.g.neighbors(v) & self.sets[b] for v in self.sets[a])
            for a, b in combinations(range(self.k), 2)
        )

    def run(self, i: int = 0) -> bool:
        self.nodes += 1
        if self._complete():
            return True
        if i == len(self.order) or not self._feasible(i):
            return False
        v = self.order[i]
        for s in self.sets:
            s.add(v)
            if self.run(i + 1):
                return True
            s.remove(v)
        if len(self.sets) < self.k:
            self.sets.append({v})
            if self.run(i + 1):
                return True
            self.sets.pop()
        return self.run(i + 1)


def find_clique_minor(g: Graph, k: int, *, limits: Limits | None = None) -> MinorWitness | None:
    """A K_k minor witness, or None if g has no K_k minor."""
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    limits = limits or Limits()
    if g.n > limits.max_exact_minor:
        raise ResourceGuardError("max_exact_minor", limits.max_exact_minor, g.n)
    if g.n < k or g.edge_count < comb(k, 2):
        return None
    clique = maximum_clique(g)
    if len(clique) >= k:
        return MinorWitness.of(frozenset({v}) for v in sorted(clique)[:k]).normalized()
    if k > limits.max_minor_k:
        raise ResourceGuardError("max_minor_k", limits.max_minor_k, k)
    for comp in components(g):
        if len(comp) < k:
            continue
        search = _MinorSearch(g, comp, k)
        found = search.run()
        logger.debug("K_%d search on component of size %d: %d states", k, len(comp), search.nodes)
        if found:
            return MinorWitness.of(frozenset(s) for s in search.sets).normalized()
    return None


def hadwiger_upper_bound(g: Graph) -> int:
    """Largest k with C(k, 2) <= |E|, capped at n."""
    return min(g.n, (1 + isqrt(1 + 8 * g.edge_count)) // 2)


def hadwiger_search(g: Graph, *, limits: Limits | None = None) -> tuple[MinorWitness, bool]:
    """Largest clique minor found, and whether it is proven maximum.

    The search climbs from the maximum clique and stops unproven when the next
    size would exceed ``max_minor_k``.
    """
    if g.n == 0:
        raise PreconditionError("the empty graph has no clique minor", clause="non-empty graph")
    limits = limits or Limits()
    if g.n > limits.max_exact_minor:
        raise ResourceGuardError("max_exact_minor", limits.max_exact_minor, g.n)
    clique = sorted(maximum_clique(g))
    best = MinorWitness.of(frozenset({v}) for v in clique).normalized()
    for k in range(len(clique) + 1, hadwiger_upper_bound(g) + 1):
        if k > limits.max_minor_k:
            logger.warning("Stopping clique-minor search at K_%d: max_minor_k=%d", k, limits.max_minor_k)
            return best, False
        witness = find_clique_minor(g, k, limits=limits)
        if witness is None:
            break
        best = witness
    return best, True


def hadwiger_number(g: Graph, *, limits: Limits | None = None) -> tuple[int, MinorWitness]:
    """Largest k with a K_k minor, with a witness."""
    limits = limits or Limits()
    best, proven = hadwiger_search(g, limits=limits)
    if not proven:
        raise ResourceGuardError("max_minor_k", limits.max_minor_k, best.k + 1)
    logger.info("Hadwiger number %d (n=%d)", best.k, g.n)
    return best.k, best


# ----------------------------------------------------------------------
# Subdivisions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionWitness:
    """Branch vertices and, for each index pair ``(a, b)`` with ``a < b``, the
    interior vertices of the path from ``branch_vertices[a]`` to ``branch_vertices[b]``."""

    branch_vertices: tuple[int, ...]
    paths: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.branch_vertices)

    def __hash__(self) -> int:
        return hash((self.branch_vertices, tuple(sorted(self.paths.items()))))


def _shortest_path(g: Graph, source: int, target: int, allowed: set[int]) -> list[int] | None:
    """BFS path with neighbours scanned in increasing order; interior drawn from ``allowed``."""
    parent = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w in parent:
                continue
            if w == target:
                path = [w, v]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            if w in allowed:
                parent[w] = v
                queue.append(w)
    return None


def greedy_subdivision(g: Graph) -> SubdivisionWitness:
    """Grow a subdivided clique one branch vertex at a time.

    Candidates are tried by decreasing degree (least id on ties). A candidate
    is kept if it can be joined to every earlier branch vertex by shortest
    paths whose interiors avoid all branch vertices and every interior already
    used; otherwise it is skipped. The result is a lower bound on the
    topological clique number.
    """
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("greedy_subdivision needs a non-empty connected graph", clause="connected")
    branch: list[int] = []
    used: set[int] = set()
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for v in sorted(g.vertices, key=lambda u: (-g.degree(u), u)):
        if v in used:
            continue
        taken: set[int] = set()
        new_paths = {}
        for a, b in enumerate(branch):
            allowed = set(g.vertices) - used - taken - set(branch) - {v}
            path = _shortest_path(g, b, v, allowed)
            if path is None:
                break
            interior = path[1:-1]
            taken.update(interior)
            new_paths[(a, len(branch))] = tuple(interior)
        else:
            paths.update(new_paths)
            used.update(taken)
            branch.append(v)
            continue
        logger.debug("Subdivision candidate %d rejected at size %d", v, len(branch))
    logger.info("Greedy subdivision of K_%d found (n=%d)", len(branch), g.n)
    return SubdivisionWitness(tuple(branch), paths)


def clique_minor_from_subdivision(w: SubdivisionWitness) -> MinorWitness:
    """Merge each path interior into the branch set of its lower endpoint."""
    sets = [{v} for v in w.branch_vertices]
    for (a, _b), interior in w.paths.items():
        sets[a].update(interior)
    return MinorWitness.of(sets)


def verify_subdivision(g: Graph, w: SubdivisionWitness) -> Verdict:
    branch = w.branch_vertices
    if len(set(branch)) != len(branch):
        return Verdict(False, "branch vertices are not distinct")
    if any(not 0 <= v < g.n for v in branch):
        return Verdict(False, "branch vertex outside the graph")
    expected = set(combinations(range(len(branch)), 2))
    if set(w.paths) != expected:
        return Verdict(False, "paths must be given for exactly the pairs a < b of branch indices")
    seen: dict[int, tuple[int, int]] = {}
    branch_set = set(branch)
    for pair in sorted(w.paths):
        interior = w.paths[pair]
        walk = [branch[pair[0]], *interior, branch[pair[1]]]
        for u, v in zip(walk, walk[1:]):
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.adjacent(u, v):
                return Verdict(False, f"path {pair} steps along non-edge ({u}, {v})")
        for v in interior:
            if v in branch_set:
                return Verdict(False, f"path {pair} passes through branch vertex {v}")
            if v in seen:
                return Verdict(False, f"paths {seen[v]} and {pair} share interior vertex {v}")
            seen[v] = pair
    minor = verify_minor(g, clique_minor_from_subdivision(w))
    if not minor:
        return Verdict(False, f"contracted subdivision is not a clique minor: {minor.reason}")
    return Verdict(True)


# ----------------------------------------------------------------------
# Kurepa minor families
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PairSeparation:
    a: int
    b: int
    overlapping: bool
    separator: VertexSet | None
    separated: bool
    # filled when no separator avoids both unions or the avoiding one is larger
    unrestricted: VertexSet | None = None


@dataclass(frozen=True)
class KurepaReport:
    k: int
    witnesses: tuple[Verdict, ...]
    pairs: tuple[PairSeparation, ...]
    chains: tuple[tuple[int, ...], ...] | None = None
    chains_distinct: bool | None = None

    @property
    def verdict(self) -> bool:
        return all(self.witnesses) and all(p.separated for p in self.pairs)


def kurepa_family_check(
    g: Graph,
    family: Sequence[MinorWitness],
    k: int,
    *,
    decomposition: Decomposition | None = None,
) -> KurepaReport:
    """Check that every witness is a K_k minor and every pair is separated by fewer than k vertices."""
    mixed = sorted({w.k for w in family} - {k})
    if mixed:
        raise PreconditionError(f"witnesses claim clique sizes {mixed}, expected {k}", clause="uniform k")

    verdicts = tuple(verify_minor(g, w) for w in family)
    pairs = []
    for a, b in combinations(range(len(family)), 2):
        x, y = family[a].union(), family[b].union()
        if not x or not y:
            pairs.append(PairSeparation(a, b, False, None, False))
            continue
        if x & y:
            loose = min_separator_unrestricted(g, x, y).vertices
            pairs.append(PairSeparation(a, b, True, None, False, loose))
            continue
        sep = min_separator(g, x, y)
        loose = min_separator_unrestricted(g, x, y).vertices
        strict = None if sep is None else sep.vertices
        extra = loose if strict is None or len(loose) < len(strict) else None
        separated = strict is not None and len(strict) < k
        pairs.append(PairSeparation(a, b, False, strict, separated, extra))

    chains = distinct = None
    if decomposition is not None:
        from core.decomposition import chain_from_minor

        found = [tuple(chain_from_minor(decomposition, w)) for w, ok in zip(family, verdicts) if ok]
        chains = tuple(found)
        distinct = len({frozenset(c) for c in found}) == len(found)

    report = KurepaReport(k, verdicts, tuple(pairs), chains, distinct)
    logger.info("Kurepa family of %d K_%d minors: verdict=%s", len(family), k, report.verdict)
    return report


def kurepa_family_of_tree(t: Tree, k: int) -> list[MinorWitness]:
    """K_k minors of the comparability graph of ``t``, one per branch of length at least k.

    Each witness is the top k nodes of a branch as singletons; branches whose
    top k nodes meet an earlier witness are skipped.
    """
    from core.tree import iter_branches

    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    family = []
    used: set[int] = set()
    for branch in iter_branches(t):
        if len(branch) < k:
            continue
        top = branch[-k:]
        if used.intersection(top):
            continue
        used.update(top)
        family.append(MinorWitness.of(frozenset({node}) for node in top))
    return family

