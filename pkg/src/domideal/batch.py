"""
Vectorized evaluation of the tree predicates over many labeled trees at once.

Exhaustive sweeps visit n^(n-2) trees per size (4.8 million at n = 9), which is
out of reach one ``Graph`` object at a time. Here a batch of trees is an int
array of edges with shape (B, n-1, 2), and every predicate returns one boolean
per tree. Minimal dominating sets are found by tabulating all 2^n subsets, so
batches are limited to small n.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .domination import minimal_in_table

MAX_BATCH_N = 14
DEFAULT_BATCH = 1 << 13


def prufer_sequences(n: int, start: int, stop: int) -> np.ndarray:
    """Prüfer sequences number ``start..stop-1`` in lexicographic order, shape (B, n-2)."""
    k = np.arange(start, stop, dtype=np.int64)
    width = max(n - 2, 0)
    powers = n ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (k[:, None] // powers[None, :]) % n


def decode_prufer_batch(seqs: np.ndarray, n: int) -> np.ndarray:
    """Edge arrays (B, n-1, 2) of the trees with the given Prüfer sequences."""
    B = seqs.shape[0]
    rows = np.arange(B)
    if n == 1:
        return np.zeros((B, 0, 2), dtype=np.int64)
    degree = np.ones((B, n), dtype=np.int64)
    for k in range(n - 2):
        np.add.at(degree, (rows, seqs[:, k]), 1)
    edges = np.empty((B, n - 1, 2), dtype=np.int64)
    for k in range(n - 2):
        leaf = np.argmax(degree == 1, axis=1)
        edges[:, k, 0] = leaf
        edges[:, k, 1] = seqs[:, k]
        degree[rows, leaf] -= 1
        degree[rows, seqs[:, k]] -= 1
    last = np.nonzero(degree == 1)[1].reshape(B, 2)
    edges[:, n - 2] = last
    return edges


def all_tree_batches(n: int, batch_size: int = DEFAULT_BATCH) -> Iterator[np.ndarray]:
    """Every labeled tree on n vertices, in lexicographic Prüfer order, in batches."""
    total = n ** max(n - 2, 0)
    for start in range(0, total, batch_size):
        seqs = prufer_sequences(n, start, min(start + batch_size, total))
        yield decode_prufer_batch(seqs, n)


def degrees(edges: np.ndarray, n: int) -> np.ndarray:
    B = edges.shape[0]
    deg = np.zeros((B, n), dtype=np.int64)
    rows = np.arange(B)
    for k in range(edges.shape[1]):
        deg[rows, edges[:, k, 0]] += 1
        deg[rows, edges[:, k, 1]] += 1
    return deg


def closed_masks(edges: np.ndarray, n: int) -> np.ndarray:
    """Closed-neighborhood bitmask of every vertex, shape (B, n)."""
    B = edges.shape[0]
    rows = np.arange(B)
    masks = np.broadcast_to(np.int64(1) << np.arange(n, dtype=np.int64), (B, n)).copy()
    for k in range(edges.shape[1]):
        u, v = edges[:, k, 0], edges[:, k, 1]
        masks[rows, u] |= np.int64(1) << v
        masks[rows, v] |= np.int64(1) << u
    return masks


def is_corona(edges: np.ndarray, n: int) -> np.ndarray:
    """Whether each graph has a whisker perfect matching (every non-leaf has exactly one leaf neighbor)."""
    B = edges.shape[0]
    if n % 2:
        return np.zeros(B, dtype=bool)
    deg = degrees(edges, n)
    leaf_nbrs = np.zeros((B, n), dtype=np.int64)
    rows = np.arange(B)
    for k in range(edges.shape[1]):
        u, v = edges[:, k, 0], edges[:, k, 1]
        leaf_nbrs[rows, u] += deg[rows, v] == 1
        leaf_nbrs[rows, v] += deg[rows, u] == 1
    return np.all((deg >= 1) & ((deg == 1) | (leaf_nbrs == 1)), axis=1)


def redundant_generators(masks: np.ndarray) -> np.ndarray:
    """(B, n) flags: the support contains another support (ties keep the lowest index)."""
    a = masks[:, :, None]
    b = masks[:, None, :]
    n = masks.shape[1]
    # contained[b, u, v]: support u ⊆ support v
    contained = (a & b) == a
    strict = contained & (a != b)
    lower = np.tril(np.ones((n, n), dtype=bool), k=-1).T  # u < v
    tie = contained & (a == b) & lower[None]
    return np.any(strict | tie, axis=1)


def is_complete_intersection(masks: np.ndarray) -> np.ndarray:
    """Pairwise-disjoint minimal generator supports, one flag per row."""
    keep = ~redundant_generators(masks)
    n = masks.shape[1]
    overlap = (masks[:, :, None] & masks[:, None, :]) != 0
    both = keep[:, :, None] & keep[:, None, :] & ~np.eye(n, dtype=bool)[None]
    return ~np.any(overlap & both, axis=(1, 2))


def transversal_table(hyperedges: np.ndarray, n: int) -> np.ndarray:
    """(B, 2^n) table: does each subset meet all hyperedges of its row?"""
    if n > MAX_BATCH_N:
        raise ValueError(f"batch tables are limited to n <= {MAX_BATCH_N}")
    dtype = np.uint16 if n <= 16 else np.uint32
    subsets = np.arange(1 << n, dtype=dtype)
    h = hyperedges.astype(dtype)
    table = np.ones((h.shape[0], 1 << n), dtype=bool)
    for j in range(h.shape[1]):
        table &= (subsets[None, :] & h[:, j, None]) != 0
    return table


def minimal_size_range(hyperedges: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Smallest and largest minimal-transversal cardinality per row."""
    minimal = minimal_in_table(transversal_table(hyperedges, n), n)
    popcount = np.array([bin(s).count("1") for s in range(1 << n)], dtype=np.int64)
    lo = np.where(minimal, popcount, n + 1).min(axis=1)
    hi = np.where(minimal, popcount, -1).max(axis=1)
    return lo, hi


def tree_profile(edges: np.ndarray, n: int) -> dict[str, np.ndarray]:
    """Per-tree flags: corona, domination-unmixed, ideal unmixed, complete intersection.

    Ideal unmixedness is computed from the minimized generators, independently
    of the dominating-set table.
    """
    closed = closed_masks(edges, n)
    lo, hi = minimal_size_range(closed, n)
    # a redundant generator is replaced by the full support, which every
    # nonempty set meets, so it constrains nothing
    full = np.int64((1 << n) - 1)
    gens = np.where(redundant_generators(closed), full, closed)
    glo, ghi = minimal_size_range(gens, n)
    return {
        "corona": is_corona(edges, n),
        "domination_unmixed": lo == hi,
        "ideal_unmixed": glo == ghi,
        "complete_intersection": is_complete_intersection(closed),
    }
