"""One-shot graph analysis: decomposition, chromatic and Hadwiger numbers, bound checks."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from typing import TypeVar

from core.coloring import chromatic_bounds, chromatic_number
from core.config import Limits
from core.decomposition import decompose
from core.graph import Graph, clique_number, is_connected
from core.minors import greedy_subdivision, hadwiger_search, hadwiger_upper_bound
from core.schemas import AnalysisReport, DecompositionSummary, Estimate, GraphStats, Inequality

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _timed(timing: dict[str, float], stage: str, fn: Callable[[], T]) -> T:
    start = time.perf_counter()
    result = fn()
    timing[stage] = round((time.perf_counter() - start) * 1000, 3)
    return result


def estimate_chromatic(g: Graph, limits: Limits) -> Estimate:
    if g.n <= limits.max_exact_chromatic:
        return Estimate.of(chromatic_number(g, limits=limits)[0])
    lower, upper, _ = chromatic_bounds(g)
    logger.warning("n=%d exceeds max_exact_chromatic=%d; reporting bounds", g.n, limits.max_exact_chromatic)
    return Estimate.bounds(lower, upper, f"bound: n exceeds max_exact_chromatic={limits.max_exact_chromatic}")


def estimate_hadwiger(g: Graph, limits: Limits) -> Estimate:
    """Exact under the guards; otherwise the best witness against the edge-count upper bound."""
    if g.n == 0:
        return Estimate.of(0)
    upper = hadwiger_upper_bound(g)
    if g.n <= limits.max_exact_minor:
        best, proven = hadwiger_search(g, limits=limits)
        if proven:
            return Estimate.of(best.k)
        return Estimate.bounds(best.k, upper, f"bound: K_{best.k + 1} exceeds max_minor_k={limits.max_minor_k}")
    lower = clique_number(g)
    if is_connected(g):
        lower = max(lower, greedy_subdivision(g).m)
    logger.warning("n=%d exceeds max_exact_minor=%d; reporting bounds", g.n, limits.max_exact_minor)
    return Estimate.bounds(lower, upper, f"bound: n exceeds max_exact_minor={limits.max_exact_minor}")


def analyze(g: Graph, *, limits: Limits | None = None) -> AnalysisReport:
    limits = limits or Limits()
    timing: dict[str, float] = {}
    d = _timed(timing, "decompose", lambda: decompose(g))
    chromatic = _timed(timing, "chromatic", lambda: estimate_chromatic(g, limits))
    hadwiger = _timed(timing, "hadwiger", lambda: estimate_hadwiger(g, limits))
    return AnalysisReport(
        graph=GraphStats(n=g.n, edges=g.edge_count, connected=g.n > 0 and is_connected(g)),
        chromatic=chromatic,
        hadwiger=hadwiger,
        decomposition=DecompositionSummary(height=d.height, level_sizes=d.level_sizes(), chain=d.is_chain),
        inequalities=[
            Inequality.judge("chi <= height", chromatic, d.height),
            Inequality.judge("h <= height", hadwiger, d.height),
        ],
        timing_ms=timing,
    )


def _show(e: Estimate) -> str:
    return str(e.value) if e.exact else f"{e.lower}..{e.upper} ({e.note})"


def render_text(report: AnalysisReport) -> str:
    g, d = report.graph, report.decomposition
    lines = [
        f"vertices: {g.n}",
        f"edges: {g.edges}",
        f"connected: {'yes' if g.connected else 'no'}",
        f"chromatic number: {_show(report.chromatic)}",
        f"hadwiger number: {_show(report.hadwiger)}",
        f"decomposition height: {d.height}",
        f"level sizes: {' '.join(map(str, d.level_sizes)) or '-'}",
        f"chain: {'yes' if d.chain else 'no'}",
    ]
    lines.extend(f"{q.name}: {q.status}" for q in report.inequalities)
    lines.append("timing (ms): " + ", ".join(f"{k}={v}" for k, v in report.timing_ms.items()))
    return "\n".join(lines) + "\n"
