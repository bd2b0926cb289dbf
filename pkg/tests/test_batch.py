import numpy as np
import pytest

from domideal import batch
from domideal.domination import is_domination_unmixed
from domideal.graph import Graph, all_trees, prufer_decode, recognize_corona
from domideal.ideal import closed_neighborhood_ideal, is_complete_intersection, is_unmixed


def as_graphs(edges, n):
    return [Graph(n, map(tuple, e.tolist())) for e in edges]


@pytest.mark.parametrize("n", range(2, 8))
def test_batch_decoding_matches_scalar(n):
    got = [G for e in batch.all_tree_batches(n, batch_size=97) for G in as_graphs(e, n)]
    assert got == list(all_trees(n))


def test_prufer_sequences_lexicographic():
    seqs = batch.prufer_sequences(4, 0, 16)
    assert seqs[0].tolist() == [0, 0] and seqs[1].tolist() == [0, 1] and seqs[-1].tolist() == [3, 3]


def test_decode_star():
    edges = batch.decode_prufer_batch(np.array([[3, 3, 3]]), 5)
    assert as_graphs(edges, 5)[0] == prufer_decode([3, 3, 3], 5)


@pytest.mark.parametrize("n", range(2, 8))
def test_profile_matches_scalar_exhaustively(n):
    for edges in batch.all_tree_batches(n):
        p = batch.tree_profile(edges, n)
        for b, T in enumerate(as_graphs(edges, n)):
            N = closed_neighborhood_ideal(T)
            assert p["corona"][b] == (recognize_corona(T) is not None)
            assert p["domination_unmixed"][b] == is_domination_unmixed(T)
            assert p["ideal_unmixed"][b] == is_unmixed(N)
            assert p["complete_intersection"][b] == is_complete_intersection(N)


@pytest.mark.parametrize("n", [8, 9])
def test_profile_matches_scalar_sampled(n):
    rng = np.random.default_rng(n)
    seqs = rng.integers(0, n, size=(300, n - 2))
    edges = batch.decode_prufer_batch(seqs, n)
    p = batch.tree_profile(edges, n)
    for b, T in enumerate(as_graphs(edges, n)):
        assert T == prufer_decode(seqs[b].tolist(), n)
        assert p["corona"][b] == (recognize_corona(T) is not None)
        assert p["domination_unmixed"][b] == is_domination_unmixed(T)
        assert p["complete_intersection"][b] == is_complete_intersection(closed_neighborhood_ideal(T))


def test_redundant_generators_ties_keep_lowest():
    masks = np.array([[0b011, 0b011, 0b111]])
    assert batch.redundant_generators(masks).tolist() == [[False, True, True]]


def test_table_size_guard():
    with pytest.raises(ValueError):
        batch.transversal_table(np.zeros((1, 1), dtype=np.int64), batch.MAX_BATCH_N + 1)
