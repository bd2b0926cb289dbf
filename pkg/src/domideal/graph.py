"""
Finite simple graphs on vertices 0..n-1 (displayed as X1..Xn), with the
neighborhood, cover, matching, bipartition, tree and corona machinery.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from .bitsets import ScaleError, UniverseMismatch, VertexSet

MAX_EXHAUSTIVE_MATCHING = 24
ALL_TREES_CAP = 10


class GraphFormatError(ValueError):
    pass


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(i, j)`` with ``i < j``; duplicates
    collapse and loops are rejected.
    """

    __slots__ = ("n", "edges", "adjacency", "_closed")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"edge ({i}, {j}) out of range for {n} vertices")
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed in a simple graph")
            normalized.add((i, j) if i < j else (j, i))
        adj = [[] for _ in range(n)]
        for i, j in normalized:
            adj[i].append(j)
            adj[j].append(i)
        self.n = n
        self.edges = frozenset(normalized)
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self._closed = tuple(
            (1 << v) | sum(1 << u for u in self.adjacency[v]) for v in range(n)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.sorted_edges()})"

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhood of every vertex, as int bitmasks."""
        return self._closed

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]

    def has_isolated_vertices(self) -> bool:
        return any(not a for a in self.adjacency)

    def vertex_set(self, indices: Iterable[int]) -> VertexSet:
        return VertexSet.from_indices(self.n, indices)

    def to_edge_list(self) -> str:
        """Canonical edge-list text; ``parse_edge_list`` inverts it."""
        lines = [str(self.n)]
        lines += [f"{i + 1} {j + 1}" for i, j in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i + 1, j + 1] for i, j in self.sorted_edges()]}


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges, each stored as ``(i, j)`` with ``i < j``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple(sorted((min(p), max(p)) for p in self.pairs))
        seen = set()
        for i, j in norm:
            if i in seen or j in seen:
                raise ValueError(f"vertex shared between matching pairs: {norm}")
            seen.update((i, j))
        object.__setattr__(self, "pairs", norm)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def is_valid_for(self, G: Graph) -> bool:
        return all(p in G.edges for p in self.pairs)

    def covered(self) -> set[int]:
        return {v for p in self.pairs for v in p}

    def __str__(self) -> str:
        return "{" + ", ".join(f"X{i + 1}X{j + 1}" for i, j in self.pairs) + "}"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a vertex count line, then ``i j`` lines (1-based).

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise GraphFormatError(f"line {lineno}: expected a vertex count, got {raw!r}")
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphFormatError(f"line {lineno}: expected 'i j', got {raw!r}")
        i, j = int(fields[0]), int(fields[1])
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}: {raw!r}")
        if i == j:
            raise GraphFormatError(f"line {lineno}: loop edge {raw!r}")
        edges.append((i - 1, j - 1))
    if n is None:
        raise GraphFormatError("missing vertex count line")
    return Graph(n, edges)


def _check_set(G: Graph, S: VertexSet) -> None:
    if S.n != G.n:
        raise UniverseMismatch(f"vertex set over {S.n} vertices, graph has {G.n}")


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for {G.n} vertices")
    return VertexSet(G.n, G.closed_masks[v])


def is_dominating(G: Graph, S: VertexSet) -> bool:
    _check_set(G, S)
    return all(S.bits & m for m in G.closed_masks)


def is_vertex_cover(G: Graph, S: VertexSet) -> bool:
    _check_set(G, S)
    return all(i in S or j in S for i, j in G.edges)


def components(G: Graph) -> list[list[int]]:
    """Connected components, each in BFS order from its lowest vertex."""
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(comp)
    return out


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(components(G)) == 1


def is_tree(G: Graph) -> bool:
    return is_connected(G) and len(G.edges) == G.n - 1


def bipartition(G: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """Canonical 2-coloring, or None when G has an odd cycle.

    Each component puts its lowest-index vertex on the first side.
    """
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adjacency[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    first = VertexSet.from_indices(G.n, (v for v in range(G.n) if color[v] == 0))
    second = VertexSet.from_indices(G.n, (v for v in range(G.n) if color[v] == 1))
    return first, second


def _hopcroft_karp(G: Graph, left: list[int]) -> list[tuple[int, int]]:
    INF = float("inf")
    mate = [-1] * G.n
    left_set = set(left)
    dist = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                m = mate[w]
                if m == -1:
                    found = True
                elif dist[m] == INF:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        return found

    def dfs(u: int) -> bool:
        for w in G.adjacency[u]:
            m = mate[w]
            if m == -1 or (dist[m] == dist[u] + 1 and dfs(m)):
                mate[u] = w
                mate[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if mate[u] == -1:
                dfs(u)
    return [(u, mate[u]) for u in range(G.n) if u in left_set and mate[u] != -1]


def _exhaustive_matching(G: Graph) -> list[tuple[int, int]]:
    adj = G.adjacency

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[tuple[int, int], ...]:
        if not mask:
            return ()
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        result = None
        for u in adj[v]:
            if rest >> u & 1:
                cand = ((v, u),) + best(rest & ~(1 << u))
                if result is None or len(cand) > len(result):
                    result = cand
        skip = best(rest)
        if result is None or len(skip) > len(result):
            result = skip
        return result

    return list(best((1 << G.n) - 1))


def maximum_matching(G: Graph) -> Matching:
    """A maximum-cardinality matching.

    Hopcroft-Karp on bipartite graphs; memoized exhaustive search otherwise,
    refused above ``MAX_EXHAUSTIVE_MATCHING`` vertices. Vertices and neighbors
    are explored in index order, so the representative is deterministic.
    """
    sides = bipartition(G)
    if sides is not None:
        return Matching(tuple(_hopcroft_karp(G, list(sides[0]))))
    if G.n > MAX_EXHAUSTIVE_MATCHING:
        raise ScaleError(
            f"non-bipartite maximum matching limited to {MAX_EXHAUSTIVE_MATCHING} vertices"
        )
    return Matching(tuple(_exhaustive_matching(G)))


def corona(G: Graph) -> Graph:
    """Attach a whisker ``i + n`` to every vertex ``i``."""
    n = G.n
    return Graph(2 * n, list(G.edges) + [(i, i + n) for i in range(n)])


def recognize_corona(H: Graph) -> Optional[Matching]:
    """Whisker pairing of H if H is a K1-corona, else None.

    H is a corona exactly when it has a perfect matching in which every pair
    has a degree-1 endpoint. Such a matching is forced: each leaf pairs with
    its only neighbor, so every non-leaf needs exactly one leaf neighbor.
    """
    if H.n % 2:
        return None
    deg = [len(a) for a in H.adjacency]
    partner = [-1] * H.n
    for v in range(H.n):
        if deg[v] != 1:
            continue
        u = H.adjacency[v][0]
        if deg[u] == 1:
            partner[v] = u  # K2 component
        elif partner[u] == -1:
            partner[u] = v
            partner[v] = u
        else:
            return None  # second leaf on the same stem
    if any(p == -1 for p in partner):
        return None
    return Matching(tuple((v, partner[v]) for v in range(H.n) if v < partner[v]))


def prufer_decode(seq: Iterable[int], n: int) -> Graph:
    """The labeled tree on ``n`` vertices with Prüfer sequence ``seq``."""
    seq = list(seq)
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if len(seq) != max(n - 2, 0):
        raise ValueError(f"Prüfer sequence for {n} vertices has length {n - 2}")
    if n == 1:
        return Graph(1)
    degree = [1] * n
    for a in seq:
        if not 0 <= a < n:
            raise ValueError(f"Prüfer entry {a} out of range")
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree, decoded from a seeded random Prüfer sequence."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, n, size=max(n - 2, 0))
    return prufer_decode(seq.tolist(), n)


def all_trees(n: int, cap: int = ALL_TREES_CAP) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices once, in lexicographic Prüfer order."""
    if n < 1:
        raise ValueError("all_trees needs n >= 1")
    if n > cap:
        raise ScaleError(f"all_trees limited to n <= {cap} ({n}^{n - 2} trees requested)")
    for seq in itertools.product(range(n), repeat=max(n - 2, 0)):
        yield prufer_decode(seq, n)


def random_graph(n: int, p: float, seed) -> Graph:
    """Erdős-Rényi G(n, p). ``seed`` may be an int or a numpy Generator."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))
