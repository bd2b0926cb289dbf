"""
Executable checks of the decomposition and Cohen-Macaulay results, one
verifier per claim, plus the tree Cohen-Macaulay classifier and corpus sweeps.

Every verifier returns a ``VerdictReport`` that keeps "hypothesis not met"
(a vacuous pass) apart from "conclusion checked and held".
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from . import batch
from .bitsets import Antichain, ScaleError, VertexSet
from .domination import (
    Hypergraph,
    dominating_sets,
    is_domination_unmixed,
    minimal_dominating_sets,
    minimal_transversals,
)
from .graph import (
    Graph,
    all_trees,
    bipartition,
    corona,
    is_dominating,
    is_tree,
    maximum_matching,
    recognize_corona,
)
from .ideal import (
    closed_neighborhood_ideal,
    intersect,
    intersect_all,
    is_complete_intersection,
    is_unmixed,
    variable_ideal,
)

ALL_DOMINATING_MAX_N = 16
DECOMPOSITION_MAX_N = 20
CORONA_MAX_D = 16
VERTEX_COVER_MAX_N = 16
MATCHING_MAX_N = 20

CLAIMS = (
    "decomposition",
    "ideal-equality",
    "corona-proposition",
    "vertex-cover-lemma",
    "matching-lemma",
    "tree-theorem",
    "tree-corollary",
)


@dataclass
class VerdictReport:
    claim: str
    hypothesis_met: bool
    conclusion_holds: Optional[bool]
    witness: Optional[dict] = None
    details: dict = field(default_factory=dict)
    edge_case: Optional[str] = None

    @property
    def vacuous(self) -> bool:
        return not self.hypothesis_met

    @property
    def failed(self) -> bool:
        return self.hypothesis_met and self.conclusion_holds is False and self.edge_case is None

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "hypothesis_met": self.hypothesis_met,
            "conclusion_holds": self.conclusion_holds,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.edge_case is not None:
            out["edge_case"] = self.edge_case
        if self.details:
            out["details"] = self.details
        return out


def _report(claim, holds, G, details, offending=None, graphs=None) -> VerdictReport:
    witness = None
    if not holds:
        witness = {"graphs": [g.to_json() for g in (graphs or [G])]}
        if offending is not None:
            witness["offending"] = offending
    return VerdictReport(claim, True, holds, witness, details)


def _fold_check(I, ideals) -> bool:
    return intersect_all(ideals) == I


def verify_decomposition(G: Graph) -> VerdictReport:
    """N_G equals the intersection over all dominating sets and over the minimal ones, irredundantly."""
    if G.n < 1:
        raise ValueError("decomposition check needs at least one vertex")
    if G.n > DECOMPOSITION_MAX_N:
        raise ScaleError(f"decomposition check limited to {DECOMPOSITION_MAX_N} vertices")
    I = closed_neighborhood_ideal(G)
    minimal = minimal_dominating_sets(G)
    comps = [variable_ideal(G.n, S) for S in minimal]
    details = {"components": len(comps), "all_dominating_checked": G.n <= ALL_DOMINATING_MAX_N}
    offending = {}

    if G.n <= ALL_DOMINATING_MAX_N:
        every = dominating_sets(G)
        details["dominating_sets"] = len(every)
        if not _fold_check(I, (variable_ideal(G.n, S) for S in every)):
            offending["all_dominating"] = "intersection differs from N_G"

    if not _fold_check(I, comps):
        offending["minimal_dominating"] = "intersection differs from N_G"

    # irredundancy: intersection of all-but-one via prefix/suffix folds
    k = len(comps)
    prefix = [None] * (k + 1)
    suffix = [None] * (k + 1)
    for i in range(k):
        prefix[i + 1] = comps[i] if prefix[i] is None else intersect(prefix[i], comps[i])
    for i in range(k - 1, -1, -1):
        suffix[i] = comps[i] if suffix[i + 1] is None else intersect(comps[i], suffix[i + 1])
    redundant = []
    for i in range(k):
        rest = [x for x in (prefix[i], suffix[i + 1]) if x is not None]
        if not rest:
            continue  # dropping the only component leaves the unit ideal, strictly larger
        others = rest[0] if len(rest) == 1 else intersect(rest[0], rest[1])
        if others == I:
            redundant.append([v + 1 for v in minimal[i]])
    if redundant:
        offending["redundant_components"] = redundant

    return _report("decomposition", not offending, G, details, offending or None)


def verify_ideal_equality_corollary(G: Graph, H: Graph) -> VerdictReport:
    """N_G == N_H exactly when G and H have the same (minimal) dominating sets."""
    if G.n != H.n:
        raise ValueError(f"graphs on {G.n} and {H.n} vertices")
    same_ideal = closed_neighborhood_ideal(G) == closed_neighborhood_ideal(H)
    same_minimal = minimal_dominating_sets(G) == minimal_dominating_sets(H)
    details = {"same_ideal": same_ideal, "same_minimal_dominating_sets": same_minimal}
    holds = same_ideal == same_minimal
    if G.n <= ALL_DOMINATING_MAX_N:
        same_all = dominating_sets(G) == dominating_sets(H)
        details["same_dominating_sets"] = same_all
        holds = holds and same_all == same_minimal
    return _report("ideal-equality", holds, G, details, graphs=[G, H])


def verify_corona_proposition(G: Graph) -> VerdictReport:
    """The corona H of G has 2^d minimal dominating sets, each of size d, and N_H is a complete intersection."""
    d = G.n
    if d > CORONA_MAX_D:
        raise ScaleError(f"corona check limited to base graphs with {CORONA_MAX_D} vertices")
    if d < 1:
        raise ValueError("corona of the empty graph has the zero ideal")
    H = corona(G)
    mds = minimal_dominating_sets(H)
    NH = closed_neighborhood_ideal(H)
    checks = {
        "count_is_2^d": len(mds) == 2**d,
        "all_size_d": mds.sizes() == {d},
        "complete_intersection": is_complete_intersection(NH),
        "ideal_unmixed": is_unmixed(NH),
        "domination_unmixed": is_domination_unmixed(H),
    }
    details = {"d": d, "minimal_dominating_sets": len(mds), **checks}
    bad = [k for k, ok in checks.items() if not ok]
    return _report("corona-proposition", not bad, G, details, bad or None)


def minimal_vertex_covers(G: Graph) -> Antichain:
    """Brute-force minimal vertex covers (minimal transversals of the edges)."""
    if G.n > VERTEX_COVER_MAX_N:
        raise ScaleError(f"vertex cover enumeration limited to {VERTEX_COVER_MAX_N} vertices")
    edges = [VertexSet.from_indices(G.n, e) for e in G.sorted_edges()]
    return minimal_transversals(Hypergraph(G.n, edges), engine="brute")


def verify_vertex_cover_lemma(G: Graph) -> VerdictReport:
    """Without isolated vertices, every vertex cover dominates."""
    covers = minimal_vertex_covers(G)
    if G.has_isolated_vertices():
        return VerdictReport(
            "vertex-cover-lemma", False, None,
            details={"isolated_vertices": [v + 1 for v in G.isolated_vertices()]},
        )
    # minimal covers suffice: supersets of dominating sets dominate
    bad = [[v + 1 for v in S] for S in covers if not is_dominating(G, S)]
    return _report("vertex-cover-lemma", not bad, G, {"minimal_vertex_covers": len(covers)}, bad or None)


def verify_matching_lemma(G: Graph) -> VerdictReport:
    """Bipartite, domination-unmixed, no isolated vertices: dominating-set size equals maximum matching size."""
    if G.n > MATCHING_MAX_N:
        raise ScaleError(f"matching check limited to {MATCHING_MAX_N} vertices")
    bipartite = bipartition(G) is not None
    no_isolated = not G.has_isolated_vertices()
    sizes = minimal_dominating_sets(G).sizes()
    unmixed = len(sizes) <= 1
    details = {"bipartite": bipartite, "no_isolated_vertices": no_isolated, "domination_unmixed": unmixed}
    if not (bipartite and no_isolated and unmixed):
        return VerdictReport("matching-lemma", False, None, details=details)
    (size,) = sizes
    M = maximum_matching(G)
    details.update(dominating_set_size=size, maximum_matching_size=len(M), matching=[[i + 1, j + 1] for i, j in M])
    return _report("matching-lemma", size == len(M), G, details)


def _require_tree(T: Graph) -> None:
    if not is_tree(T):
        raise ValueError("input is not a tree")


def verify_tree_theorem(T: Graph) -> VerdictReport:
    """A tree is a K1-corona exactly when it is domination-unmixed."""
    _require_tree(T)
    is_cor = recognize_corona(T) is not None
    unmixed = is_domination_unmixed(T)
    details = {"corona": is_cor, "domination_unmixed": unmixed}
    report = _report("tree-theorem", is_cor == unmixed, T, details)
    if T.n == 1:
        # K1 is unmixed ({X1}) but has odd order, so it is no corona
        report.edge_case = "K1: domination-unmixed but not a corona"
    return report


def verify_tree_corollary(T: Graph) -> VerdictReport:
    """For a tree: domination-unmixed, N_T unmixed and N_T complete intersection coincide."""
    _require_tree(T)
    I = closed_neighborhood_ideal(T)
    legs = {
        "domination_unmixed": is_domination_unmixed(T),
        "ideal_unmixed": is_unmixed(I),
        "complete_intersection": is_complete_intersection(I),
    }
    return _report("tree-corollary", len(set(legs.values())) == 1, T, legs)


class CMKind(enum.Enum):
    COMPLETE_INTERSECTION = "CompleteIntersection"
    COHEN_MACAULAY = "CohenMacaulay"
    UNMIXED = "Unmixed"
    MIXED = "Mixed"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class CMStatus:
    kind: CMKind
    note: str = ""

    def __str__(self) -> str:
        return self.kind.value


def cm_status_of_tree(T: Graph) -> CMStatus:
    """Cohen-Macaulay status of N_T for a tree T.

    For trees, complete intersection, Cohen-Macaulay and unmixed coincide with
    domination-unmixedness, which is what gets computed.
    """
    if not is_tree(T):
        return CMStatus(CMKind.NOT_APPLICABLE, "not a tree; the tree characterization does not apply")
    if is_domination_unmixed(T):
        return CMStatus(
            CMKind.COMPLETE_INTERSECTION,
            "domination-unmixed tree; complete intersection, hence Cohen-Macaulay and unmixed",
        )
    return CMStatus(CMKind.MIXED, "minimal dominating sets of different sizes; N_T is not unmixed, so not Cohen-Macaulay")


def cm_status(G: Graph) -> CMStatus:
    """Tree classification for trees; for other graphs only the complete-intersection sufficient condition."""
    if is_tree(G):
        return cm_status_of_tree(G)
    if G.n and is_complete_intersection(closed_neighborhood_ideal(G)):
        return CMStatus(CMKind.COMPLETE_INTERSECTION, "complete intersection, hence Cohen-Macaulay")
    return CMStatus(CMKind.NOT_APPLICABLE, "no Cohen-Macaulay criterion for this non-tree graph")


@dataclass
class SweepReport:
    claim: str
    instances: int = 0
    passes: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)
    edge_cases: list = field(default_factory=list)
    by_size: dict = field(default_factory=dict)

    def add(self, report: VerdictReport, size: Optional[int] = None) -> None:
        self.instances += 1
        if report.edge_case is not None:
            self.edge_cases.append({"edge_case": report.edge_case, **report.to_json()})
        elif report.vacuous:
            self.vacuous += 1
        elif report.failed:
            self.failures.append(report.witness)
        else:
            self.passes += 1
        if size is not None:
            row = self.by_size.setdefault(size, {"instances": 0, "passes": 0})
            row["instances"] += 1
            row["passes"] += int(report.conclusion_holds is True and report.edge_case is None)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = asdict(self)
        out["failures"] = sorted(self.failures, key=repr)
        out["by_size"] = {str(k): v for k, v in sorted(self.by_size.items())}
        return out


VERIFIERS: dict[str, Callable[[Graph], VerdictReport]] = {
    "decomposition": verify_decomposition,
    "corona-proposition": verify_corona_proposition,
    "vertex-cover-lemma": verify_vertex_cover_lemma,
    "matching-lemma": verify_matching_lemma,
    "tree-theorem": verify_tree_theorem,
    "tree-corollary": verify_tree_corollary,
}


def sweep(claim: str, graphs: Iterable[Graph]) -> SweepReport:
    """Run a single-graph verifier over a corpus."""
    verifier = VERIFIERS[claim]
    out = SweepReport(claim)
    for G in graphs:
        out.add(verifier(G), G.n)
    return out


def sweep_pairs(pairs: Iterable[tuple[Graph, Graph]]) -> SweepReport:
    out = SweepReport("ideal-equality")
    for G, H in pairs:
        out.add(verify_ideal_equality_corollary(G, H), G.n)
    return out


TREE_CLAIMS = ("tree-theorem", "tree-corollary")


def _batch_agreement(claim: str, p: dict) -> np.ndarray:
    if claim == "tree-theorem":
        return p["corona"] == p["domination_unmixed"]
    return (p["domination_unmixed"] == p["ideal_unmixed"]) & (p["ideal_unmixed"] == p["complete_intersection"])


def sweep_trees_exhaustive_many(claims: Iterable[str], max_n: int, min_n: int = 1) -> dict[str, SweepReport]:
    """Check tree claims on every labeled tree with ``min_n..max_n`` vertices.

    Trees are screened in vectorized batches, sharing one pass over the trees
    for all claims; any tree the batch flags is re-run through the scalar
    verifier so the failure carries a full witness.
    """
    claims = tuple(claims)
    for claim in claims:
        if claim not in TREE_CLAIMS:
            raise ValueError(f"{claim!r} is not a tree claim")
    if max_n > batch.MAX_BATCH_N:
        raise ScaleError(f"exhaustive tree sweeps limited to n <= {batch.MAX_BATCH_N}")
    out = {c: SweepReport(c) for c in claims}
    for n in range(max(min_n, 1), max_n + 1):
        if n == 1:
            for c in claims:
                out[c].add(VERIFIERS[c](Graph(1)), 1)
            continue
        for c in claims:
            out[c].by_size[n] = {"instances": 0, "passes": 0}
        for edges in batch.all_tree_batches(n):
            p = batch.tree_profile(edges, n)
            for c in claims:
                agree = _batch_agreement(c, p)
                rep, row = out[c], out[c].by_size[n]
                good = int(np.count_nonzero(agree))
                rep.instances += len(edges)
                rep.passes += good
                row["instances"] += len(edges)
                row["passes"] += good
                for b in np.flatnonzero(~agree):
                    T = Graph(n, map(tuple, edges[b].tolist()))
                    report = VERIFIERS[c](T)
                    # the scalar verifier is authoritative for the witness
                    rep.failures.append(report.witness or {"graphs": [T.to_json()], "batch_only": True})
    return out


def sweep_trees_exhaustive(claim: str, max_n: int, min_n: int = 1) -> SweepReport:
    return sweep_trees_exhaustive_many((claim,), max_n, min_n)[claim]


def iter_trees(max_n: int, min_n: int = 1):
    """Scalar tree corpus, mainly for small sweeps and cross-checks."""
    for n in range(min_n, max_n + 1):
        yield from all_trees(n)
