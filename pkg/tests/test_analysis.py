import json

import pytest

from core.analysis import analyze, estimate_chromatic, estimate_hadwiger, render_text
from core.config import Limits
from core.generators import apex_cliques, complete, cycle, random_connected
from core.graph import Graph
from core.schemas import AnalysisReport


def test_analyze_cycle():
    report = analyze(cycle(5))
    assert report.graph.n == 5
    assert report.graph.edges == 5
    assert report.chromatic.value == 3
    assert report.hadwiger.value == 3
    # T_G of a cycle is a chain through every vertex
    assert report.decomposition.height == 5
    assert report.decomposition.level_sizes == [1, 1, 1, 1, 1]
    assert [q.status for q in report.inequalities] == ["holds", "holds"]
    assert set(report.timing_ms) == {"decompose", "chromatic", "hadwiger"}


def test_analyze_apex_cliques_is_tight():
    report = analyze(apex_cliques([2, 3]))
    assert report.chromatic.value == 4
    assert report.hadwiger.value == 4
    assert report.decomposition.height == 4
    assert report.decomposition.level_sizes == [1, 2, 2, 1]
    assert not report.decomposition.chain


def test_analyze_k22_chain(k22):
    report = analyze(k22)
    assert report.decomposition.chain
    assert report.decomposition.level_sizes == [1, 1, 1, 1]
    assert report.chromatic.value == 2


def test_analyze_empty_graph():
    report = analyze(Graph(0))
    assert report.chromatic.value == 0
    assert report.hadwiger.value == 0
    assert report.decomposition.height == 0
    assert not report.graph.connected
    assert "level sizes: -" in render_text(report)


def test_bounds_when_guards_apply():
    limits = Limits(max_exact_chromatic=3, max_exact_minor=3)
    report = analyze(complete(5), limits=limits)
    assert not report.chromatic.exact
    assert (report.chromatic.lower, report.chromatic.upper) == (5, 5)
    assert "max_exact_chromatic=3" in report.chromatic.note
    assert not report.hadwiger.exact
    assert report.hadwiger.lower == 5
    assert [q.status for q in report.inequalities] == ["holds", "holds"]


@pytest.mark.parametrize("seed", range(6))
def test_height_bounds_hold_on_random_graphs(seed):
    g = random_connected(9, 0.4, seed)
    report = analyze(g)
    assert report.chromatic.exact and report.hadwiger.exact
    assert all(q.status == "holds" for q in report.inequalities)


def test_estimates_directly(c5):
    assert estimate_chromatic(c5, Limits()).value == 3
    bounds = estimate_hadwiger(c5, Limits(max_exact_minor=2))
    assert not bounds.exact
    assert (bounds.lower, bounds.upper) == (3, 3)


def test_minor_k_guard_degrades_to_bounds():
    # apex over K7 and K8: K9 is a clique, K10 needs the exact search
    report = analyze(apex_cliques([7, 8]))
    assert report.graph.n == 16
    assert report.chromatic.value == 9
    assert not report.hadwiger.exact
    assert (report.hadwiger.lower, report.hadwiger.upper) == (9, 11)
    assert "max_minor_k=8" in report.hadwiger.note
    assert report.decomposition.height == 9
    assert [q.status for q in report.inequalities] == ["holds", "undetermined"]


def test_hadwiger_bounds_from_edge_count():
    g = complete(6)
    report = analyze(g, limits=Limits(max_exact_minor=5))
    assert (report.hadwiger.lower, report.hadwiger.upper) == (6, 6)
    sparse = analyze(cycle(8), limits=Limits(max_exact_minor=5))
    # 8 edges allow at most a K_4 minor
    assert (sparse.hadwiger.lower, sparse.hadwiger.upper) == (3, 4)
    assert sparse.inequalities[1].status == "holds"


def test_report_json_and_text(c4):
    report = analyze(c4)
    data = json.loads(report.to_json())
    assert data["schema"] == 1
    assert data["inequalities"][0] == {"name": "chi <= height", "rhs": 4, "status": "holds"}
    assert AnalysisReport.from_json(report.to_json()) == report
    text = render_text(report)
    assert "chromatic number: 2" in text
    assert "chi <= height: holds" in text
