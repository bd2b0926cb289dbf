"""
Minimal dominating sets, enumerated as minimal transversals of the
closed-neighborhood hypergraph.

Two engines compute minimal transversals:

* ``"berge"`` (default) adds hyperedges one at a time, extending every
  partial transversal that misses the new hyperedge and pruning
  non-minimal results.
* ``"brute"`` tabulates all 2^n subsets with numpy and keeps the transversals
  from which no single vertex can be dropped. It is the independent oracle.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .bitsets import Antichain, ScaleError, UniverseMismatch, VertexSet, minimal_masks
from .graph import Graph, is_dominating

BRUTE_FORCE_MAX_N = 20
DEFAULT_MEMBER_CAP = 10**6


class Hypergraph:
    __slots__ = ("universe", "edges")

    def __init__(self, universe: int, edges: Iterable[VertexSet]):
        edges = tuple(edges)
        for e in edges:
            if e.n != universe:
                raise UniverseMismatch(f"hyperedge over universe {e.n}, expected {universe}")
            if not e.bits:
                raise ValueError("empty hyperedge: no set can meet it")
        self.universe = universe
        self.edges = edges

    @classmethod
    def of_graph(cls, G: Graph) -> Hypergraph:
        """Closed neighborhoods of all vertices of G."""
        return cls(G.n, (VertexSet(G.n, m) for m in G.closed_masks))

    def masks(self) -> list[int]:
        return [e.bits for e in self.edges]

    def minimized(self) -> Hypergraph:
        """Drop duplicates and hyperedges containing another; transversals are unchanged."""
        return Hypergraph(self.universe, (VertexSet(self.universe, m) for m in minimal_masks(self.masks())))

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph({self.universe}, [{', '.join(str(e) for e in self.edges)}])"


def transversal_table(universe: int, edge_masks: Iterable[int]) -> np.ndarray:
    """Boolean array over all 2^universe subsets: does the subset meet every edge?"""
    if universe > BRUTE_FORCE_MAX_N:
        raise ScaleError(f"brute-force enumeration limited to {BRUTE_FORCE_MAX_N} vertices")
    subsets = np.arange(1 << universe, dtype=np.int64)
    hit = np.ones(subsets.size, dtype=bool)
    for e in edge_masks:
        hit &= (subsets & e) != 0
    return hit


def minimal_in_table(table: np.ndarray, universe: int) -> np.ndarray:
    """Entries of an upward-closed table from which no single element can be removed.

    ``table`` is indexed by subset bitmask along its last axis; leading axes
    are treated as a batch.
    """
    lead = table.shape[:-1]
    if table.shape[-1] != 1 << universe:
        raise ValueError("last axis must have length 2**universe")
    minimal = table.copy()
    for i in range(universe):
        # axis -2 of the view is bit i; compare each set containing i with the set lacking it
        shape = (*lead, 1 << (universe - 1 - i), 2, 1 << i)
        m, t = minimal.reshape(shape), table.reshape(shape)
        m[..., 1, :] &= ~t[..., 0, :]
    return minimal


def _brute_force(H: Hypergraph) -> list[int]:
    table = transversal_table(H.universe, H.masks())
    return np.flatnonzero(minimal_in_table(table, H.universe)).tolist()


def _berge(H: Hypergraph, member_cap: int) -> list[int]:
    edges = sorted(minimal_masks(H.masks()), key=int.bit_count)
    transversals = [0]
    for e in edges:
        kept = [t for t in transversals if t & e]
        missing = [t for t in transversals if not t & e]
        if not missing:
            continue
        # Extensions of distinct missing sets are pairwise incomparable, so an
        # extension can only be dominated by a kept set (which must contain v).
        verts = [1 << v for v in range(H.universe) if e >> v & 1]
        by_vertex = {v: [k for k in kept if k & v] for v in verts}
        fresh = []
        for t in missing:
            for v in verts:
                cand = t | v
                for k in by_vertex[v]:
                    if k & cand == k:
                        break
                else:
                    fresh.append(cand)
        transversals = kept + fresh
        if len(transversals) > member_cap:
            raise ScaleError(
                f"intermediate transversal family exceeded the member cap of {member_cap}"
            )
    return transversals


def minimal_transversals(
    H: Hypergraph, engine: str = "berge", member_cap: int = DEFAULT_MEMBER_CAP
) -> Antichain:
    """All inclusion-minimal sets meeting every hyperedge of H."""
    if engine == "berge":
        masks = _berge(H, member_cap)
    elif engine == "brute":
        masks = _brute_force(H)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return Antichain._from_minimal_masks(H.universe, masks)


def minimal_dominating_sets(G: Graph, engine: str = "berge") -> Antichain:
    return minimal_transversals(Hypergraph.of_graph(G), engine=engine)


def dominating_sets(G: Graph) -> list[VertexSet]:
    """Every dominating set of G (not just the minimal ones), by brute force."""
    table = transversal_table(G.n, G.closed_masks)
    return [VertexSet(G.n, m) for m in np.flatnonzero(table).tolist()]


def is_minimal_dominating(G: Graph, S: VertexSet) -> bool:
    # dominating sets are closed upward, so checking single deletions suffices
    if not is_dominating(G, S):
        return False
    return not any(is_dominating(G, S.remove(v)) for v in S)


def is_domination_unmixed(G: Graph) -> bool:
    return len(minimal_dominating_sets(G).sizes()) <= 1
