"""
Vertex subsets as Python-int bitsets, and canonically ordered antichains of them.

A ``VertexSet`` plays three roles: a subset of graph vertices, the support of a
square-free monomial, and the generating set of a variable ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class UniverseMismatch(ValueError):
    """Two vertex sets (or a set and a graph) live over different universes."""


class ScaleError(ValueError):
    """An enumeration was refused because the input exceeds a size guard."""


def mask_indices(bits: int) -> tuple[int, ...]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def mask_key(bits: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: cardinality first, then the sorted index tuple."""
    return (bits.bit_count(), mask_indices(bits))


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of ``masks``, deduplicated, in canonical order."""
    kept: list[int] = []
    for m in sorted(set(masks), key=mask_key):
        # kept is sorted by size, so only earlier (smaller or equal) sets can be subsets
        for k in kept:
            if k & m == k:
                break
        else:
            kept.append(m)
    return kept


@dataclass(frozen=True)
class VertexSet:
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("universe size must be non-negative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} fall outside a universe of size {self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> VertexSet:
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"vertex index {i} out of range for universe {n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def indices(self) -> tuple[int, ...]:
        return mask_indices(self.bits)

    def labels(self) -> list[str]:
        return [f"X{i + 1}" for i in self.indices()]

    def sort_key(self):
        return mask_key(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.bits >> i & 1)

    def _same(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise UniverseMismatch(f"universe {self.n} vs {other.n}")

    def issubset(self, other: VertexSet) -> bool:
        self._same(other)
        return self.bits & other.bits == self.bits

    def meets(self, other: VertexSet) -> bool:
        self._same(other)
        return bool(self.bits & other.bits)

    def __le__(self, other: VertexSet) -> bool:
        return self.issubset(other)

    def __lt__(self, other: VertexSet) -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __ge__(self, other: VertexSet) -> bool:
        return other.issubset(self)

    def __gt__(self, other: VertexSet) -> bool:
        return other < self

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def add(self, i: int) -> VertexSet:
        return VertexSet.from_indices(self.n, (*self.indices(), i))

    def remove(self, i: int) -> VertexSet:
        return VertexSet(self.n, self.bits & ~(1 << i))

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {list(self.indices())})"


class Antichain:
    """Pairwise-incomparable vertex sets over one universe, in canonical order.

    Canonical order is by cardinality, then by the sorted tuple of indices, so
    two antichains holding the same family compare equal member by member.
    """

    __slots__ = ("universe", "members")

    def __init__(self, universe: int, members: Iterable[VertexSet] = ()):
        members = list(members)
        for m in members:
            if m.n != universe:
                raise UniverseMismatch(f"member over universe {m.n}, expected {universe}")
        masks = [m.bits for m in members]
        if len(set(masks)) != len(masks):
            raise ValueError("antichain members must be distinct")
        for i, a in enumerate(masks):
            for b in masks[i + 1:]:
                if a & b == a or a & b == b:
                    raise ValueError("antichain members must be pairwise incomparable")
        self.universe = universe
        self.members = tuple(sorted(members, key=VertexSet.sort_key))

    @classmethod
    def _from_minimal_masks(cls, universe: int, masks: Iterable[int]) -> Antichain:
        # caller guarantees the masks already form an antichain
        obj = cls.__new__(cls)
        obj.universe = universe
        obj.members = tuple(VertexSet(universe, m) for m in sorted(masks, key=mask_key))
        return obj

    @classmethod
    def minimal_of(cls, universe: int, sets: Iterable[VertexSet]) -> Antichain:
        """The inclusion-minimal members of ``sets``."""
        masks = []
        for s in sets:
            if s.n != universe:
                raise UniverseMismatch(f"member over universe {s.n}, expected {universe}")
            masks.append(s.bits)
        return cls._from_minimal_masks(universe, minimal_masks(masks))

    def masks(self) -> list[int]:
        return [m.bits for m in self.members]

    def sizes(self) -> set[int]:
        return {len(m) for m in self.members}

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Antichain):
            return NotImplemented
        return self.universe == other.universe and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.universe, self.members))

    def __repr__(self) -> str:
        return f"Antichain({self.universe}, [{', '.join(str(m) for m in self.members)}])"

    def to_json(self) -> list[list[int]]:
        """1-based index arrays, matching the X1..Xn labels."""
        return [[i + 1 for i in m.indices()] for m in self.members]
