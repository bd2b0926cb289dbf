"""
Square-free monomial ideals, represented purely by their minimal generator
supports. No coefficient field appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from .bitsets import Antichain, UniverseMismatch, VertexSet, minimal_masks
from .domination import Hypergraph, minimal_transversals
from .graph import Graph


@dataclass(frozen=True)
class Monomial:
    support: VertexSet

    @property
    def degree(self) -> int:
        return len(self.support)

    def __str__(self) -> str:
        return "*".join(self.support.labels()) or "1"


class MonomialIdeal:
    """Ideal in n variables given by its unique minimal square-free generators."""

    __slots__ = ("nvars", "generators")

    def __init__(self, nvars: int, generators: Antichain):
        if generators.universe != nvars:
            raise UniverseMismatch(f"generators over {generators.universe} variables, expected {nvars}")
        self.nvars = nvars
        self.generators = generators

    def monomials(self) -> list[Monomial]:
        return [Monomial(s) for s in self.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.nvars, self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.monomials()) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.nvars}, {self})"

    def to_json(self) -> list[list[int]]:
        return self.generators.to_json()


@dataclass(frozen=True)
class Decomposition:
    """Irredundant intersection of variable ideals, one per component support."""

    nvars: int
    components: Antichain

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def ideals(self) -> list[MonomialIdeal]:
        return [variable_ideal(self.nvars, c) for c in self.components]

    def lines(self) -> list[str]:
        return ["(" + ", ".join(c.labels()) + ")" for c in self.components]

    def __str__(self) -> str:
        return " ∩ ".join(self.lines())

    def to_json(self) -> list[list[int]]:
        return self.components.to_json()


def _as_support(nvars: int, m: Union[Monomial, VertexSet]) -> VertexSet:
    s = m.support if isinstance(m, Monomial) else m
    if s.n != nvars:
        raise UniverseMismatch(f"monomial over {s.n} variables, ideal has {nvars}")
    return s


def _check_same(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise UniverseMismatch(f"ideals over {I.nvars} and {J.nvars} variables")


def _require_generators(I: MonomialIdeal) -> None:
    if not len(I.generators):
        raise ValueError("the zero ideal has no irreducible decomposition here")


def minimize_generators(nvars: int, supports: Iterable[VertexSet]) -> MonomialIdeal:
    """Keep the supports not containing another (i.e. monomials not divisible by another)."""
    masks = []
    for s in supports:
        if s.n != nvars:
            raise UniverseMismatch(f"support over {s.n} variables, expected {nvars}")
        if not s.bits:
            raise ValueError("the constant monomial 1 (unit ideal) is out of scope")
        masks.append(s.bits)
    return MonomialIdeal(nvars, Antichain._from_minimal_masks(nvars, minimal_masks(masks)))


def closed_neighborhood_ideal(G: Graph) -> MonomialIdeal:
    return minimize_generators(G.n, (VertexSet(G.n, m) for m in G.closed_masks))


def contains(I: MonomialIdeal, m: Union[Monomial, VertexSet]) -> bool:
    s = _as_support(I.nvars, m).bits
    return any(g & s == g for g in I.generators.masks())


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff I ⊆ J, i.e. every generator of I lies in J."""
    _check_same(I, J)
    return all(contains(J, g) for g in I.generators)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J, generated by the pairwise lcms (support unions) of generators."""
    _check_same(I, J)
    if is_subideal(I, J):
        return I
    if is_subideal(J, I):
        return J
    unions = {x | y for x in I.generators.masks() for y in J.generators.masks()}
    return MonomialIdeal(I.nvars, Antichain._from_minimal_masks(I.nvars, minimal_masks(unions)))


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection (the unit ideal) is out of scope")
    return reduce(intersect, ideals)


def variable_ideal(nvars: int, S: VertexSet) -> MonomialIdeal:
    """The ideal generated by the variables indexed by S."""
    if S.n != nvars:
        raise UniverseMismatch(f"variable set over {S.n}, expected {nvars}")
    if not S.bits:
        raise ValueError("variable ideal of the empty set is the zero ideal")
    return MonomialIdeal(nvars, Antichain._from_minimal_masks(nvars, [1 << i for i in S]))


def irreducible_decomposition(I: MonomialIdeal, engine: str = "berge") -> Decomposition:
    """Components are the minimal transversals of the generator supports."""
    _require_generators(I)
    H = Hypergraph(I.nvars, I.generators)
    return Decomposition(I.nvars, minimal_transversals(H, engine=engine))


def height(I: MonomialIdeal) -> int:
    return min(len(c) for c in irreducible_decomposition(I))


def is_unmixed(I: MonomialIdeal) -> bool:
    return len(irreducible_decomposition(I).components.sizes()) == 1


def is_complete_intersection(I: MonomialIdeal) -> bool:
    # monomial generators form a regular sequence iff they are pairwise coprime
    _require_generators(I)
    seen = 0
    for g in I.generators.masks():
        if seen & g:
            return False
        seen |= g
    return True
