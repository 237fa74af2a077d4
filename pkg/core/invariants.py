"""Cross-module invariant suite run over graph corpora.

Each check takes a :class:`Subject` (a graph plus its decomposition) and
returns a list of problems, or ``None`` when it does not apply to that graph
(size guards, or n above the oracle range). ``run_check`` drives the suite over
a corpus, optionally in a process pool, and returns a deterministic summary.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations

from core import oracles
from core.coloring import chromatic_number, is_proper
from core.config import Limits
from core.corpus import CorpusSpec, iter_corpus
from core.decomposition import (
    Decomposition,
    chain_from_minor,
    check_antichains_independent,
    consumption_check,
    decompose,
    level_coloring,
    level_width_check,
    verify_decomposition,
)
from core.errors import TGraphError
from core.formats import format_edge_list
from core.graph import (
    Graph,
    clique_number,
    components,
    independence_implies_kl,
    independence_number,
    is_k_connected,
    is_kl_connected,
    min_separator,
)
from core.minors import clique_minor_from_subdivision, find_clique_minor, greedy_subdivision, hadwiger_number
from core.minors import verify_subdivision
from core.schemas import CheckSummary, FailureDoc
from core.tree import comparability_graph, is_chain, width_and_height

logger = logging.getLogger(__name__)

HADWIGER_MAX_VERTICES = 8
ORACLE_MAX_VERTICES = 6
KL_ORACLE_MAX_VERTICES = 8
MAX_SUITE_K = 3


@dataclass
class Subject:
    graph: Graph
    limits: Limits
    corrupt: bool = False

    @cached_property
    def decomposition(self) -> Decomposition:
        d = decompose(self.graph)
        return corrupt_decomposition(d) if self.corrupt else d

    @cached_property
    def height(self) -> int:
        return self.decomposition.height

    @cached_property
    def chromatic(self) -> int | None:
        if self.graph.n > self.limits.max_exact_chromatic:
            return None
        return chromatic_number(self.graph, limits=self.limits)[0]

    @property
    def small_for_minors(self) -> bool:
        return self.graph.n <= min(HADWIGER_MAX_VERTICES, self.limits.max_exact_minor)


def corrupt_decomposition(d: Decomposition) -> Decomposition:
    """Swap the vertices carried by the first two nodes (harness self-test)."""
    if d.tree.m < 2:
        return d
    vertices = list(d.branch_vertex)
    vertices[0], vertices[1] = vertices[1], vertices[0]
    return replace(d, branch_vertex=tuple(vertices))


# ----------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------


def check_decomposition(s: Subject) -> list[str]:
    report = verify_decomposition(s.graph, s.decomposition)
    return [f"{c.name}: {c.detail}" for c in report.failed()]


def check_consumption(s: Subject) -> list[str]:
    return consumption_check(s.graph, s.decomposition)


def check_chromatic_bound(s: Subject) -> list[str] | None:
    if s.chromatic is None:
        return None
    return [] if s.chromatic <= s.height else [f"chi={s.chromatic} exceeds height {s.height}"]


def check_level_coloring(s: Subject) -> list[str]:
    coloring = level_coloring(s.decomposition)
    problems = []
    if not is_proper(s.graph, coloring):
        problems.append("level coloring is not proper")
    if coloring.count > s.height:
        problems.append(f"level coloring uses {coloring.count} colors, height is {s.height}")
    return problems


def check_hadwiger_bound(s: Subject) -> list[str] | None:
    if not s.small_for_minors or s.graph.n == 0:
        return None
    h, witness = hadwiger_number(s.graph, limits=s.limits)
    problems = []
    if h > s.height:
        problems.append(f"h={h} exceeds height {s.height}")
    chain = chain_from_minor(s.decomposition, witness)
    if len(chain) != h or not is_chain(s.decomposition.tree, chain):
        problems.append(f"K_{h} witness gives {chain}, not a chain of length {h}")
    return problems


def check_subdivision(s: Subject) -> list[str] | None:
    if s.graph.n == 0:
        return None
    w = greedy_subdivision(s.graph)
    verdict = verify_subdivision(s.graph, w)
    if not verdict:
        return [f"greedy subdivision does not verify: {verdict.reason}"]
    chain = chain_from_minor(s.decomposition, clique_minor_from_subdivision(w))
    if len(chain) != w.m:
        return [f"subdivision of K_{w.m} gives a chain of length {len(chain)}"]
    return []


def check_antichains(s: Subject) -> list[str]:
    return check_antichains_independent(s.graph, s.decomposition)


def check_comparability(s: Subject) -> list[str] | None:
    """The comparability graph of the decomposition tree is perfect with the tree's numbers."""
    t = s.decomposition.tree
    comp = comparability_graph(t)
    width, height = width_and_height(t)
    problems = []
    if clique_number(comp) != height:
        problems.append(f"clique number {clique_number(comp)} != height {height}")
    if independence_number(comp) != width:
        problems.append(f"independence number {independence_number(comp)} != width {width}")
    if width != len(t.leaves):
        problems.append(f"width {width} != leaf count {len(t.leaves)}")
    if comp.n <= s.limits.max_exact_chromatic and chromatic_number(comp, limits=s.limits)[0] != height:
        problems.append(f"chromatic number of comparability graph != height {height}")
    if comp.n <= HADWIGER_MAX_VERTICES and comp.n and hadwiger_number(comp, limits=s.limits)[0] != height:
        problems.append(f"hadwiger number of comparability graph != height {height}")
    return problems


def _component_counts(g: Graph, k: int) -> list[int]:
    counts = []
    for size in range(min(k, g.n + 1)):
        for removed in combinations(g.vertices, size):
            counts.append(len(components(g, set(g.vertices) - set(removed))))
    return counts


def check_level_width(s: Subject) -> list[str]:
    """For each k <= 3, test at the least l for which the graph is (k, l)-connected.

    Larger l only weakens the conclusion, and below it the check is vacuous.
    """
    g = s.graph
    problems = []
    for k in range(1, MAX_SUITE_K + 1):
        counts = _component_counts(g, k)
        if min(counts) < 1:
            if is_kl_connected(g, k, g.n + 1, limits=s.limits):
                problems.append(f"k={k}: reported (k, l)-connected although all vertices can be removed")
            continue
        least = max(counts) + 1
        if not is_kl_connected(g, k, least, limits=s.limits):
            problems.append(f"k={k}: not ({k}, {least})-connected")
        if least > 1 and is_kl_connected(g, k, least - 1, limits=s.limits):
            problems.append(f"k={k}: unexpectedly ({k}, {least - 1})-connected")
        report = level_width_check(g, s.decomposition, k, least, limits=s.limits)
        for row in report.levels:
            if not row.holds:
                problems.append(f"k={k}, l={least}: level {row.level} has {row.size} nodes over {row.below} below")
    return problems


def check_independence_kl(s: Subject) -> list[str]:
    return [
        f"no independent {k}-set but not ({k}, {k})-connected"
        for k in range(1, MAX_SUITE_K + 1)
        if not independence_implies_kl(s.graph, k, limits=s.limits)
    ]


def _non_adjacent_pair(g: Graph) -> tuple[int, int] | None:
    """Vertex 0 and the largest vertex not adjacent to it."""
    if g.n < 2:
        return None
    far = [v for v in range(g.n - 1, 0, -1) if not g.adjacent(0, v)]
    return (0, far[0]) if far else None


def check_oracles(s: Subject) -> list[str] | None:
    g = s.graph
    if g.n > ORACLE_MAX_VERTICES:
        return None
    problems = []
    for k in range(1, ORACLE_MAX_VERTICES + 1):
        fast = find_clique_minor(g, k, limits=s.limits) is not None
        if fast != oracles.has_clique_minor(g, k):
            problems.append(f"K_{k} minor decision {fast} disagrees with the partition oracle")
    if s.chromatic is not None and s.chromatic != oracles.chromatic_number(g):
        problems.append(f"chi={s.chromatic} disagrees with the assignment oracle")
    for k in range(1, MAX_SUITE_K + 1):
        if is_k_connected(g, k) != oracles.is_k_connected(g, k):
            problems.append(f"{k}-connectivity disagrees with cut enumeration")
    pair = _non_adjacent_pair(g)
    if pair is not None:
        x, y = pair
        sep = min_separator(g, {x}, {y})
        expected = oracles.min_separator_size(g, {x}, {y})
        got = None if sep is None else sep.size
        if got != expected:
            problems.append(f"separator of {x}, {y} has size {got}, oracle says {expected}")
    return problems


def check_kl_oracle(s: Subject) -> list[str] | None:
    g = s.graph
    if g.n > KL_ORACLE_MAX_VERTICES:
        return None
    return [
        f"({k}, {l})-connectivity disagrees with the bitmask enumeration"
        for k in range(1, MAX_SUITE_K + 1)
        for l in range(1, g.n + 1)
        if is_kl_connected(g, k, l, limits=s.limits) != oracles.is_kl_connected(g, k, l)
    ]


CHECKS: tuple[tuple[str, Callable[[Subject], list[str] | None]], ...] = (
    ("decomposition", check_decomposition),
    ("consumption", check_consumption),
    ("chromatic-bound", check_chromatic_bound),
    ("level-coloring", check_level_coloring),
    ("hadwiger-bound", check_hadwiger_bound),
    ("subdivision", check_subdivision),
    ("antichain-independent", check_antichains),
    ("comparability", check_comparability),
    ("level-width", check_level_width),
    ("independence-kl", check_independence_kl),
    ("oracle", check_oracles),
    ("kl-oracle", check_kl_oracle),
)


# ----------------------------------------------------------------------
# Driver
# ----------------------------------------------------------------------


@dataclass
class GraphOutcome:
    graph_id: int
    ran: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)
    edge_list: str = ""


def check_graph(graph_id: int, g: Graph, limits: Limits, corrupt: bool = False) -> GraphOutcome:
    subject = Subject(g, limits, corrupt)
    outcome = GraphOutcome(graph_id)
    for name, check in CHECKS:
        try:
            problems = check(subject)
        except TGraphError as exc:
            problems = [f"raised {type(exc).__name__}: {exc}"]
        if problems is None:
            outcome.skipped.append(name)
            continue
        outcome.ran.append(name)
        outcome.failures.extend((name, problem) for problem in problems)
    if outcome.failures:
        outcome.edge_list = format_edge_list(g)
        logger.warning("Graph %d failed %d check(s)", graph_id, len(outcome.failures))
    return outcome


def _check_job(job: tuple[int, Graph, Limits, bool]) -> GraphOutcome:
    return check_graph(*job)


def summarize(corpus: str, outcomes: Iterable[GraphOutcome]) -> CheckSummary:
    ordered = sorted(outcomes, key=lambda o: o.graph_id)
    ran: dict[str, int] = {name: 0 for name, _ in CHECKS}
    skipped: dict[str, int] = {name: 0 for name, _ in CHECKS}
    failures = []
    for outcome in ordered:
        for name in outcome.ran:
            ran[name] += 1
        for name in outcome.skipped:
            skipped[name] += 1
        failures.extend(
            FailureDoc(graph_id=outcome.graph_id, check=name, detail=detail, edge_list=outcome.edge_list)
            for name, detail in outcome.failures
        )
    return CheckSummary(
        corpus=corpus,
        graphs=len(ordered),
        checks=ran,
        failures=failures,
        skipped={name: count for name, count in skipped.items() if count},
    )


def run_check(
    spec: CorpusSpec, *, limits: Limits | None = None, workers: int = 1, corrupt: bool = False
) -> CheckSummary:
    limits = limits or Limits()
    jobs = ((graph_id, g, limits, corrupt) for graph_id, g in iter_corpus(spec))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_check_job, jobs, chunksize=16))
    else:
        outcomes = [_check_job(job) for job in jobs]
    summary = summarize(str(spec), outcomes)
    logger.info("Checked %d graphs from %s: %d failure(s)", summary.graphs, spec, len(summary.failures))
    return summary
