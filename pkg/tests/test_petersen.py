import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petersen_tsg.groups import compose
from petersen_tsg.petersen import (
    Cycle,
    NotPetersen,
    all_cycles,
    automorphism_group,
    brute_force_automorphisms,
    build_petersen,
    disjoint_five_cycle_pairs,
    enumerate_cycles,
    is_automorphism,
    is_involution,
    pair_action,
    parse_s5,
    s5_action,
    s5_correspondence,
    stabilizer,
    verify_petersen_isomorphic,
)


def nx_petersen():
    p = build_petersen()
    g = nx.Graph()
    g.add_nodes_from(range(10))
    g.add_edges_from(tuple(e) for e in p.edges)
    return g


def test_kneser_model_is_petersen():
    assert nx.is_isomorphic(nx_petersen(), nx.petersen_graph())


def test_cycle_census_matches_networkx():
    theirs = {Cycle(tuple(c)) for c in nx.simple_cycles(nx_petersen())}
    assert set(all_cycles()) == theirs
    assert len(all_cycles()) == len(theirs) == 57


def test_cycle_length_spectrum():
    assert {k: len(v) for k, v in enumerate_cycles().items()} == {5: 12, 6: 10, 8: 15, 9: 20}


def test_six_disjoint_pairs():
    pairs = disjoint_five_cycle_pairs()
    assert len(pairs) == 6
    fives = set(enumerate_cycles()[5])
    assert {c for p in pairs for c in p.cycles} == fives


def test_automorphism_group_against_brute_force():
    brute = {tuple(m[v] for v in range(10)) for m in brute_force_automorphisms(build_petersen().adjacency())}
    assert brute == set(automorphism_group().elements)
    assert len(brute) == 120


def test_s5_action_is_faithful_homomorphism():
    corr = s5_correspondence()
    assert len(set(corr.values())) == 120

    def zero_based(images):
        return tuple(x - 1 for x in images)

    for a, b in itertools.islice(itertools.product(corr, repeat=2), 0, 14400, 97):
        assert zero_based(corr[compose(a, b)]) == compose(zero_based(corr[a]), zero_based(corr[b]))


def test_parse_s5():
    assert parse_s5("(12345)") == (2, 3, 4, 5, 1)
    assert parse_s5("(1 2)(3 4)") == (2, 1, 4, 3, 5)
    assert is_automorphism(s5_action(parse_s5("(12)")).mapping)


def test_stabilizer_orders():
    for pair in disjoint_five_cycle_pairs():
        assert stabilizer(pair).order == 20
    for c in enumerate_cycles()[5]:
        assert stabilizer(c).order == 10
        assert stabilizer(c, "pointwise").order == 1
    with pytest.raises(ValueError):
        stabilizer(enumerate_cycles()[5][0], "sideways")


def test_pair_action_is_transitive():
    images = {pair_action(g)[0] for g in automorphism_group()}
    assert images == set(range(6))


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(10)), st.booleans())
def test_isomorphism_found_for_any_relabeling(relabel, as_strings):
    p = build_petersen()
    name = (lambda v: f"v{relabel[v]}") if as_strings else (lambda v: relabel[v])
    vertices = [name(v) for v in range(10)]
    edges = [tuple(name(v) for v in e) for e in p.edges]
    iso = verify_petersen_isomorphic(vertices, edges)
    assert sorted(iso.values()) == list(range(10))
    for u, v in edges:
        assert p.adjacent(iso[u], iso[v])


def test_identity_labeling_maps_to_itself():
    p = build_petersen()
    iso = verify_petersen_isomorphic(list(range(10)), [tuple(e) for e in p.edges])
    assert iso == {v: v for v in range(10)}


@pytest.mark.parametrize("graph", [
    nx.complete_bipartite_graph(3, 3),
    nx.circulant_graph(10, [1, 5]),
    nx.circulant_graph(10, [1, 2, 5]),
    nx.cubical_graph(),
])
def test_non_petersen_graphs_rejected(graph):
    with pytest.raises(NotPetersen):
        verify_petersen_isomorphic(list(graph.nodes), list(graph.edges))


def test_pair_fixing_involutions_exhaustively():
    group = automorphism_group()
    for pair in disjoint_five_cycle_pairs():
        x, y = pair.cycles
        invs = [g for g in group if is_involution(g) and x.image(g) == x and y.image(g) == y]
        assert invs
        fixed = {}
        for g in invs:
            fx = [v for v in x.vertices if g[v] == v]
            fy = [v for v in y.vertices if g[v] == v]
            assert len(fx) == 1 and len(fy) == 1
            key = (fx[0], fy[0])
            assert fixed.setdefault(key, g) == g
