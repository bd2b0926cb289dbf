import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from domideal import Graph, VertexSet
from domideal.bitsets import ScaleError
from domideal.domination import (
    Hypergraph,
    dominating_sets,
    is_domination_unmixed,
    is_minimal_dominating,
    minimal_dominating_sets,
    minimal_transversals,
    transversal_table,
)
from domideal.graph import corona, is_dominating, random_graph
from strategies import graphs, hypergraph_masks

GRAPH1_SETS = [
    [1, 2, 3], [1, 2, 6], [1, 5, 3], [4, 2, 3],
    [1, 5, 6], [4, 2, 6], [4, 5, 3], [4, 5, 6],
]


def as_labels(antichain):
    return {frozenset(i + 1 for i in s) for s in antichain}


def hyper(n, masks):
    return Hypergraph(n, [VertexSet(n, m) for m in masks])


@pytest.mark.parametrize("engine", ["berge", "brute"])
def test_graph1_eight_minimal_dominating_sets(graph1, engine):
    got = minimal_dominating_sets(graph1, engine=engine)
    assert len(got) == 8
    assert as_labels(got) == {frozenset(s) for s in GRAPH1_SETS}


@pytest.mark.parametrize("engine", ["berge", "brute"])
def test_single_hyperedge(engine):
    H = hyper(2, [0b11])
    assert [s.indices() for s in minimal_transversals(H, engine)] == [(0,), (1,)]


@pytest.mark.parametrize("engine", ["berge", "brute"])
def test_P4_closed_neighborhoods(P4, engine):
    got = minimal_transversals(Hypergraph.of_graph(P4), engine)
    # oracle: a-c, a-d, b-c, b-d
    assert [s.indices() for s in got] == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_small_graph_examples(K1, P3):
    assert [s.indices() for s in minimal_dominating_sets(K1)] == [(0,)]
    assert [s.indices() for s in minimal_dominating_sets(P3)] == [(1,), (0, 2)]


def test_empty_hyperedge_rejected():
    with pytest.raises(ValueError):
        Hypergraph(3, [VertexSet(3, 0)])


def test_no_hyperedges_gives_empty_transversal():
    for engine in ("berge", "brute"):
        got = minimal_transversals(Hypergraph(3, []), engine)
        assert [s.bits for s in got] == [0]


def test_unknown_engine():
    with pytest.raises(ValueError):
        minimal_transversals(hyper(2, [1]), engine="nope")


def test_brute_force_scale_guard():
    with pytest.raises(ScaleError):
        transversal_table(21, [1])


def test_member_cap():
    # corona of an edgeless graph on 12 vertices has 2^12 minimal dominating sets
    H = Hypergraph.of_graph(corona(Graph(12)))
    with pytest.raises(ScaleError):
        minimal_transversals(H, member_cap=1000)


def test_minimized_drops_duplicates_and_supersets():
    H = hyper(4, [0b0011, 0b0011, 0b0111, 0b1000])
    assert H.minimized().masks() == [0b1000, 0b0011]
    assert minimal_transversals(H) == minimal_transversals(H.minimized())


def test_is_minimal_dominating_examples(graph1, K2):
    assert not is_minimal_dominating(graph1, VertexSet.from_indices(6, [2, 3, 4, 5]))
    assert is_minimal_dominating(graph1, VertexSet.from_indices(6, [3, 4, 5]))
    assert not is_minimal_dominating(K2, VertexSet.full(2))


def test_is_domination_unmixed_examples(graph1, graph2, P3):
    assert is_domination_unmixed(graph1)
    assert is_domination_unmixed(graph2)
    assert not is_domination_unmixed(P3)


@settings(max_examples=150)
@given(hypergraph_masks(max_n=9))
def test_engines_agree_with_set_oracle(case):
    n, masks = case
    H = hyper(n, masks)
    berge = minimal_transversals(H, "berge")
    brute = minimal_transversals(H, "brute")
    assert berge == brute
    expect = oracles.minimal_transversals(n, [[i for i in range(n) if m >> i & 1] for m in masks])
    assert [set(s) for s in berge] == [set(s) for s in expect]


def test_engines_agree_random_up_to_16():
    rng = np.random.default_rng(2024)
    for _ in range(60):
        n = int(rng.integers(1, 17))
        m = int(rng.integers(1, 12))
        masks = [int(x) for x in rng.integers(1, 1 << n, size=m)]
        H = hyper(n, masks)
        assert minimal_transversals(H, "berge") == minimal_transversals(H, "brute")


@pytest.mark.parametrize("n", range(1, 5))
def test_engines_agree_on_all_graphs(n):
    from domideal.graph import all_graphs

    for G in all_graphs(n):
        assert minimal_dominating_sets(G, "berge") == minimal_dominating_sets(G, "brute")


@settings(max_examples=80)
@given(graphs(max_n=8))
def test_minimal_dominating_matches_oracle(G):
    got = minimal_dominating_sets(G)
    expect = oracles.minimal_dominating(G.n, G.edges)
    assert [set(s) for s in got] == [set(s) for s in expect]


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=8))
def test_minimal_members_and_neighbors(G):
    full = VertexSet.full(G.n)
    assert is_dominating(G, full)
    if not G.has_isolated_vertices():
        for v in range(G.n):
            assert is_dominating(G, full.remove(v))
    for S in minimal_dominating_sets(G):
        assert is_minimal_dominating(G, S)
        for v in range(G.n):
            if v not in S:
                assert is_dominating(G, S.add(v))
            else:
                assert not is_dominating(G, S.remove(v))


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=7))
def test_every_dominating_set_contains_a_minimal_one(G):
    mins = minimal_dominating_sets(G).masks()
    every = dominating_sets(G)
    assert len(every) == len(oracles.dominating(G.n, G.edges))
    for S in every:
        assert any(m & S.bits == m for m in mins)


@pytest.mark.parametrize("d", range(1, 8))
def test_corona_minimal_dominating_count(d):
    for seed in range(3):
        H = corona(random_graph(d, 0.5, seed))
        sets = minimal_dominating_sets(H)
        assert len(sets) == 2**d
        assert sets.sizes() == {d}
