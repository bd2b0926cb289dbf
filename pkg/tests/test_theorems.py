import json

import pytest
from hypothesis import given, settings

from domideal import Graph
from domideal.bitsets import ScaleError
from domideal.graph import all_trees, cycle_graph, path_graph, random_graph, random_tree
from domideal.theorems import (
    CMKind,
    SweepReport,
    cm_status,
    cm_status_of_tree,
    minimal_vertex_covers,
    sweep,
    sweep_pairs,
    sweep_trees_exhaustive,
    verify_corona_proposition,
    verify_decomposition,
    verify_ideal_equality_corollary,
    verify_matching_lemma,
    verify_tree_corollary,
    verify_tree_theorem,
    verify_vertex_cover_lemma,
)
from strategies import graphs


def passed(r):
    return r.hypothesis_met and r.conclusion_holds is True


def test_decomposition_examples(graph1, K2):
    r = verify_decomposition(graph1)
    assert passed(r) and r.details["components"] == 8
    r = verify_decomposition(K2)
    assert passed(r) and r.details["components"] == 2
    assert passed(verify_decomposition(random_tree(10, 7)))


def test_decomposition_guards():
    with pytest.raises(ValueError):
        verify_decomposition(Graph(0))
    with pytest.raises(ScaleError):
        verify_decomposition(Graph(21))


def test_decomposition_skips_all_dominating_above_16():
    r = verify_decomposition(path_graph(17))
    assert passed(r) and r.details["all_dominating_checked"] is False


def test_ideal_equality_examples(graph1, graph2, K2):
    r = verify_ideal_equality_corollary(graph1, graph2)
    assert passed(r) and r.details["same_ideal"] and r.details["same_minimal_dominating_sets"]
    assert passed(verify_ideal_equality_corollary(graph1, graph1))
    r = verify_ideal_equality_corollary(K2, Graph(2))
    assert passed(r)
    assert not r.details["same_ideal"] and not r.details["same_minimal_dominating_sets"]
    with pytest.raises(ValueError):
        verify_ideal_equality_corollary(K2, Graph(3))


def test_corona_proposition_examples(K1):
    r = verify_corona_proposition(path_graph(3))
    assert passed(r) and r.details["minimal_dominating_sets"] == 8
    r = verify_corona_proposition(K1)
    assert passed(r) and r.details["minimal_dominating_sets"] == 2
    assert passed(verify_corona_proposition(cycle_graph(3)))
    with pytest.raises(ScaleError):
        verify_corona_proposition(Graph(17))


def test_vertex_cover_lemma_examples(graph1, K2):
    assert passed(verify_vertex_cover_lemma(graph1))
    assert passed(verify_vertex_cover_lemma(K2))
    r = verify_vertex_cover_lemma(Graph(3, [(0, 1)]))
    assert not r.hypothesis_met and r.conclusion_holds is None and r.vacuous


def test_minimal_vertex_covers_graph1(graph1):
    got = {tuple(i + 1 for i in s) for s in minimal_vertex_covers(graph1)}
    assert got == {(1, 2, 3), (1, 2, 6), (1, 3, 5), (2, 3, 4), (2, 4, 6)}


def test_matching_lemma_examples(graph1, P4, C3):
    r = verify_matching_lemma(graph1)
    assert passed(r) and r.details["dominating_set_size"] == 3 == r.details["maximum_matching_size"]
    r = verify_matching_lemma(P4)
    assert passed(r) and r.details["maximum_matching_size"] == 2
    r = verify_matching_lemma(C3)
    assert not r.hypothesis_met and not r.details["bipartite"]


def test_tree_theorem_examples(graph1, P3, K1, graph2):
    r = verify_tree_theorem(graph1)
    assert passed(r) and r.details == {"corona": True, "domination_unmixed": True}
    r = verify_tree_theorem(P3)
    assert passed(r) and r.details == {"corona": False, "domination_unmixed": False}
    r = verify_tree_theorem(K1)
    assert r.edge_case and r.details == {"corona": False, "domination_unmixed": True}
    assert not r.failed
    with pytest.raises(ValueError):
        verify_tree_theorem(graph2)


def test_tree_corollary_examples(graph1, P3):
    assert passed(verify_tree_corollary(graph1))
    r = verify_tree_corollary(P3)
    assert passed(r) and set(r.details.values()) == {False}


def test_cm_status_of_tree(graph1, P3, P4, graph2):
    assert cm_status_of_tree(graph1).kind is CMKind.COMPLETE_INTERSECTION
    assert cm_status_of_tree(P3).kind is CMKind.MIXED
    assert cm_status_of_tree(P4).kind is CMKind.COMPLETE_INTERSECTION
    s = cm_status_of_tree(graph2)
    assert s.kind is CMKind.NOT_APPLICABLE and "tree" in s.note


def test_cm_status_never_cm_without_ci_on_trees():
    for n in range(1, 7):
        for T in all_trees(n):
            assert cm_status_of_tree(T).kind in (CMKind.COMPLETE_INTERSECTION, CMKind.MIXED)


def test_cm_status_general(graph2, C3):
    assert cm_status(graph2).kind is CMKind.COMPLETE_INTERSECTION
    assert cm_status(cycle_graph(5)).kind is CMKind.NOT_APPLICABLE


def test_failure_witness_is_replayable():
    from domideal.theorems import _report

    G = path_graph(3)
    r = _report("x", False, G, {}, offending=[[1]])
    payload = json.loads(json.dumps(r.to_json()))
    assert payload["witness"]["graphs"] == [{"n": 3, "edges": [[1, 2], [2, 3]]}]
    assert r.failed


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_verifiers_pass_on_random_graphs(G):
    assert passed(verify_decomposition(G))
    r = verify_vertex_cover_lemma(G)
    assert r.vacuous or passed(r)
    r = verify_matching_lemma(G)
    assert r.vacuous or passed(r)


def test_random_graph_sweeps():
    corpus = [random_graph(4 + s % 9, 0.3, s) for s in range(40)]
    for claim in ("decomposition", "vertex-cover-lemma", "matching-lemma"):
        assert sweep(claim, corpus).ok
    pairs = [(G, random_graph(G.n, 0.3, 99 + i)) for i, G in enumerate(corpus)]
    assert sweep_pairs(pairs).ok


@pytest.mark.parametrize("d", range(1, 9))
def test_corona_proposition_including_disconnected(d):
    for p in (0.0, 0.3, 0.7):
        assert passed(verify_corona_proposition(random_graph(d, p, d)))


def test_scalar_tree_sweep_to_7():
    for claim in ("tree-theorem", "tree-corollary"):
        r = sweep(claim, (T for n in range(1, 8) for T in all_trees(n)))
        assert r.ok
        nontrivial = sum(n ** (n - 2) for n in range(2, 8))
        if claim == "tree-theorem":
            assert r.passes == nontrivial and len(r.edge_cases) == 1
        else:
            # K1 satisfies all three legs: (X1) is a complete intersection
            assert r.passes == nontrivial + 1 and not r.edge_cases


def test_exhaustive_sweep_counts():
    r = sweep_trees_exhaustive("tree-theorem", 6)
    assert r.ok and len(r.edge_cases) == 1
    assert r.by_size[2] == {"instances": 1, "passes": 1}
    assert r.by_size[6]["instances"] == 6**4
    j = r.to_json()
    assert j["by_size"]["5"]["instances"] == 125


def test_sweep_report_buckets():
    rep = SweepReport("x")
    rep.add(verify_vertex_cover_lemma(Graph(2)), 2)
    assert rep.vacuous == 1 and rep.passes == 0 and rep.ok
