import pytest

from core.coloring import chromatic_number
from core.decomposition import decompose
from core.errors import FormatParseError, PreconditionError
from core.generators import (
    Lcg64,
    apex_cliques,
    binary_tree,
    broom_tree,
    chain_tree,
    comparability_of,
    complete,
    complete_bipartite,
    cycle,
    generate,
    parse_generator_spec,
    random_connected,
    random_tree,
    star,
    subdivided_complete,
)
from core.graph import (
    Graph,
    clique_number,
    independence_number,
    is_bipartite,
    is_connected,
    is_k_connected,
    maximum_clique,
)
from core.minors import hadwiger_number
from core.tree import width_and_height


def test_lcg_sequence_is_fixed():
    rng = Lcg64(0)
    assert rng.next_u64() == 1442695040888963407
    assert rng.next_u64() == (6364136223846793005 * 1442695040888963407 + 1442695040888963407) % 2**64


def test_lcg_floats_and_bounds():
    rng = Lcg64(7)
    values = [rng.random() for _ in range(200)]
    assert all(0.0 <= v < 1.0 for v in values)
    assert all(0 <= rng.randbelow(3) < 3 for _ in range(200))
    with pytest.raises(PreconditionError):
        rng.randbelow(0)


def test_apex_cliques_single_clique_is_k2():
    assert apex_cliques([1]) == complete(2)


def test_apex_cliques_two_three():
    g = apex_cliques([2, 3])
    assert g.n == 6
    assert g.edge_count == 9
    assert all(g.adjacent(0, v) for v in range(1, 6))
    assert chromatic_number(g)[0] == 4
    assert hadwiger_number(g)[0] == 4


def test_apex_cliques_independence():
    g = apex_cliques([2, 3, 4])
    assert g.n == 10
    assert independence_number(g) == 3


@pytest.mark.parametrize("s", range(1, 6))
def test_apex_cliques_contains_clique_of_size_s_plus_one(s):
    g = apex_cliques([s])
    assert clique_number(g) == s + 1
    assert 0 in maximum_clique(g)


@pytest.mark.parametrize("sizes", [[], [3, 3], [3, 2], [0, 1]])
def test_apex_cliques_rejects_bad_sizes(sizes):
    with pytest.raises(PreconditionError):
        apex_cliques(sizes)


def test_subdivided_complete():
    assert subdivided_complete(2) == Graph.from_edges(3, [(0, 2), (2, 1)])
    g = subdivided_complete(4)
    assert g.n == 10
    assert is_bipartite(g)
    assert decompose(g).height >= 4
    with pytest.raises(PreconditionError):
        subdivided_complete(1)


def test_complete_bipartite_and_star():
    assert complete_bipartite(1, 3) == star(3)
    assert decompose(complete_bipartite(2, 2)).is_chain
    with pytest.raises(PreconditionError):
        complete_bipartite(0, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_balanced_complete_bipartite_connectivity(n):
    assert is_k_connected(complete_bipartite(n, n), n)


def test_comparability_of_chain_is_complete():
    assert comparability_of(chain_tree(5)) == complete(5)


def test_random_tree_is_deterministic():
    assert random_tree(10, 42) == random_tree(10, 42)
    assert random_tree(10, 42).m == 10


@pytest.mark.parametrize("seed", range(20))
def test_random_connected_is_connected_and_deterministic(seed):
    g = random_connected(12, 0.1, seed)
    assert is_connected(g)
    assert g == random_connected(12, 0.1, seed)


def test_cycle_invariants():
    g = cycle(5)
    assert chromatic_number(g)[0] == 3
    assert hadwiger_number(g)[0] == 3
    with pytest.raises(PreconditionError):
        cycle(2)


def test_tree_families():
    assert binary_tree(3).m == 7
    assert width_and_height(binary_tree(3)) == (4, 3)
    assert width_and_height(broom_tree(2, 4)) == (4, 3)
    assert chain_tree(4).height == 4


@pytest.mark.parametrize("seed", [pytest.param(s, marks=pytest.mark.slow) if s >= 25 else s for s in range(200)])
def test_comparability_of_random_tree_equalities(seed):
    tree = random_tree(1 + seed % 10, seed)
    g = comparability_of(tree)
    width, height = width_and_height(tree)
    assert clique_number(g) == height
    assert chromatic_number(g)[0] == height
    assert independence_number(g) == width
    assert hadwiger_number(g)[0] == height


def test_parse_generator_spec():
    spec = parse_generator_spec("gen:apex-cliques:2,3")
    assert spec.family == "apex-cliques"
    assert spec.params == (2, 3)
    assert str(spec) == "gen:apex-cliques:2,3"
    assert parse_generator_spec("random-connected:10,0.3,7").seed == 7
    assert str(parse_generator_spec("random-connected:10,0.3,7")) == "gen:random-connected:10,0.3,7"


def test_large_seeds_are_exact():
    seed = 2**53 + 1
    spec = parse_generator_spec(f"random-connected:8,0.3,{seed}")
    assert spec.seed == seed
    assert spec.params[-1] == seed
    # the generator state keeps the low 64 bits of the seed
    assert generate(f"random-connected:8,0.3,{2**64 + 3}") == random_connected(8, 0.3, 3)
    assert generate(f"comparability-random-tree:6,{2**64 + 1}") == comparability_of(random_tree(6, 1))


def test_generate_families():
    assert generate("gen:cycle:5") == cycle(5)
    assert generate("gen:complete-bipartite:2,2") == complete_bipartite(2, 2)
    assert generate("gen:star:3") == star(3)
    assert generate("gen:comparability-random-tree:6,1") == comparability_of(random_tree(6, 1))
    assert generate("gen:random-connected:8,0.3,5") == random_connected(8, 0.3, 5)


@pytest.mark.parametrize(
    "text", ["gen:nope:3", "gen:cycle:x", "gen:cycle:2.5", "gen:complete-bipartite:2", "gen:random-connected:8,0.3,1.5"]
)
def test_generate_rejects_bad_specs(text):
    with pytest.raises(FormatParseError):
        generate(text)
