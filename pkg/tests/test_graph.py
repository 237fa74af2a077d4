import math

import networkx as nx
import pytest

from core.config import Limits
from core.errors import PreconditionError, ResourceGuardError
from core.generators import complete, complete_bipartite, path, random_connected
from core.graph import (
    Graph,
    clique_number,
    components,
    distance,
    independence_implies_kl,
    independence_number,
    induced,
    is_bipartite,
    is_k_connected,
    is_kl_connected,
    kl_counterexample,
    min_separator,
    min_separator_unrestricted,
    quotient,
    remove,
    separates,
)


def test_from_edges_normalizes_and_deduplicates():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.adjacent(0, 1) and g.adjacent(1, 0)
    assert g.degree(1) == 2


def test_self_loop_rejected():
    with pytest.raises(PreconditionError):
        Graph.from_edges(2, [(1, 1)])


def test_edge_outside_vertex_range_rejected():
    with pytest.raises(PreconditionError):
        Graph.from_edges(2, [(0, 2)])


def test_components_triangle_plus_isolated_vertex():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert components(g) == [frozenset({0, 1, 2}), frozenset({3})]


def test_components_empty_graph():
    assert components(Graph(0)) == []


def test_components_path(p3):
    assert components(p3) == [frozenset({0, 1, 2})]


def test_distance_along_path(p3):
    assert distance(p3, {0, 1, 2}, 0, 2) == 2
    assert distance(p3, {0, 1, 2}, 1, 1) == 0


def test_distance_disconnected_restriction(p3):
    assert distance(p3, {0, 2}, 0, 2) == math.inf


def test_distance_requires_endpoints_in_restriction(p3):
    with pytest.raises(PreconditionError):
        distance(p3, {0, 1}, 0, 2)


def test_is_k_connected_examples(k4, p3, k22):
    assert is_k_connected(k4, 4)
    assert not is_k_connected(k4, 5)
    assert not is_k_connected(p3, 2)
    assert is_k_connected(k22, 2)
    assert not is_k_connected(Graph(0), 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_balanced_complete_bipartite_is_n_connected(n):
    assert is_k_connected(complete_bipartite(n, n), n)


def test_is_kl_connected_star(k13):
    assert is_kl_connected(k13, 2, 4)
    assert not is_kl_connected(k13, 2, 3)
    assert kl_counterexample(k13, 2, 3) == frozenset({0})


@pytest.mark.parametrize("l", [1, 2, 5])
def test_single_vertex_is_never_2_l_connected(l):
    assert not is_kl_connected(Graph(1), 2, l)


def test_kl_with_l_two_matches_k_connectivity(k22):
    assert is_kl_connected(k22, 2, 2)
    assert is_kl_connected(k22, 2, 2) == is_k_connected(k22, 2)


def test_kl_guard_on_large_graphs():
    g = random_connected(13, 0.5, 3)
    with pytest.raises(ResourceGuardError) as exc:
        is_kl_connected(g, 5, 3, limits=Limits(max_kl_k=4))
    assert exc.value.limit_name == "max_kl_k"


def test_min_separator_path(p3):
    sep = min_separator(p3, {0}, {2})
    assert sep.vertices == frozenset({1})
    assert sep.size == 1


def test_min_separator_adjacent_is_none(k4):
    assert min_separator(k4, {0}, {1}) is None


def test_min_separator_k22(k22):
    sep = min_separator(k22, {0}, {1})
    assert sep.vertices == frozenset({2, 3})
    assert separates(k22, sep.vertices, {0}, {1})


def test_min_separator_overlapping_sets_rejected(p3):
    with pytest.raises(PreconditionError) as exc:
        min_separator(p3, {0, 1}, {1, 2})
    assert exc.value.clause == "disjoint"


def test_min_separator_disconnected_sets_need_nothing():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert min_separator(g, {0}, {3}).vertices == frozenset()


def test_unrestricted_separator_may_use_query_vertices(k4):
    loose = min_separator_unrestricted(k4, {0}, {1})
    assert loose.size == 1
    assert separates(k4, loose.vertices, {0}, {1})


def test_quotient_c4_to_triangle(c4):
    q = quotient(c4, [{0, 1}, {2}, {3}])
    assert q == complete(3)


def test_quotient_singletons_is_identity(c5):
    assert quotient(c5, [{v} for v in c5.vertices]) == c5


def test_quotient_k33_to_k4(k33):
    q = quotient(k33, [{0, 3}, {1, 4}, {2}, {5}])
    assert q == complete(4)


def test_quotient_rejects_disconnected_part(c4):
    with pytest.raises(PreconditionError) as exc:
        quotient(c4, [{0, 2}, {1}, {3}])
    assert exc.value.clause == "connected"


def test_quotient_rejects_overlap(c4):
    with pytest.raises(PreconditionError) as exc:
        quotient(c4, [{0, 1}, {1, 2}])
    assert exc.value.clause == "pairwise disjoint"


def test_induced_and_remove_relabel(c5):
    sub, index = induced(c5, {1, 2, 4})
    assert index == {1: 0, 2: 1, 4: 2}
    assert sub.edges == frozenset({(0, 1)})
    rest, _ = remove(c5, {0})
    assert rest == path(4)


def test_clique_and_independence_numbers(c5, k33):
    assert clique_number(c5) == 2
    assert independence_number(c5) == 2
    assert clique_number(k33) == 2
    assert independence_number(k33) == 3


def test_is_bipartite(c4, c5):
    assert is_bipartite(c4)
    assert not is_bipartite(c5)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_independence_implies_kl_on_small_graphs(k, c5, k4, k33):
    for g in (c5, k4, k33):
        assert independence_implies_kl(g, k)


def _atlas(max_n):
    for nxg in nx.graph_atlas_g():
        if 0 < nxg.number_of_nodes() <= max_n:
            yield Graph.from_networkx(nxg)[0]


def test_components_idempotent_on_each_component():
    graphs = [*_atlas(5), *(remove(random_connected(10, 0.25, seed), [0, 1])[0] for seed in range(10))]
    for g in graphs:
        for comp in components(g):
            assert components(g, comp) == [comp]
            sub, _ = induced(g, comp)
            assert components(sub) == [frozenset(range(len(comp)))]
