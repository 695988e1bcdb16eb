"""Cyclic group actions on quiver vertices and the standard ADE foldings."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..rootdata import DynkinType
from ..utils.errors import InputError

Orbit = Tuple[int, ...]


@dataclass(frozen=True)
class VertexAction:
    """Cyclic group generated by a permutation of [m], given by 1-based images."""

    perm: Tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        m = len(self.perm)
        if sorted(self.perm) != list(range(1, m + 1)):
            raise InputError(f"{self.perm} is not a permutation of 1..{m}")
        if self.order < 1 or self.power(self.order) != tuple(range(1, m + 1)):
            raise InputError(f"Generator does not satisfy tau^{self.order} = id")

    @classmethod
    def identity(cls, m: int) -> "VertexAction":
        return cls(tuple(range(1, m + 1)), 1)

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "VertexAction":
        """Build from disjoint cycles such as ``[(1, 3, 4)]``; the order is the lcm of cycle lengths."""
        images = list(range(1, m + 1))
        order = 1
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
            order = lcm(order, len(cycle))
        return cls(tuple(images), order)

    @property
    def m(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def power(self, g: int) -> Tuple[int, ...]:
        images = list(range(1, self.m + 1))
        for _ in range(g):
            images = [self.perm[v - 1] for v in images]
        return tuple(images)

    def elements(self) -> List[Tuple[int, ...]]:
        """tau^0, ..., tau^(order-1)."""
        return [self.power(g) for g in range(self.order)]

    def orbits(self) -> List[Orbit]:
        """Orbits sorted by their minimal element."""
        seen = set()
        found = []
        for i in range(1, self.m + 1):
            if i in seen:
                continue
            orbit = {i}
            j = self(i)
            while j != i:
                orbit.add(j)
                j = self(j)
            seen |= orbit
            found.append(tuple(sorted(orbit)))
        return found

    def to_json(self) -> Dict[str, object]:
        return {"order": self.order, "perm": list(self.perm)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "VertexAction":
        return cls(tuple(int(v) for v in data["perm"]), int(data["order"]))


@dataclass(frozen=True)
class Folding:
    """A standard folding: unfolded type, action, orbit order of the folded labels, folded type."""

    name: str
    unfolded: DynkinType
    action: VertexAction
    orbits: Tuple[Orbit, ...]
    folded: DynkinType


def standard_folding(folded: DynkinType) -> Folding:
    """The ADE folding whose folded Cartan matrix is the standard one of ``folded``."""
    n = folded.rank
    if folded.family == "B":
        m = 2 * n - 1
        action = VertexAction(tuple(m + 1 - i for i in range(1, m + 1)), 2)
        return Folding("A2n-1->Bn", DynkinType("A", m), action, tuple(action.orbits()), folded)
    if folded.family == "C":
        action = VertexAction.from_cycles(n + 1, [(n, n + 1)])
        return Folding("Dn+1->Cn", DynkinType("D", n + 1), action, tuple(action.orbits()), folded)
    if folded.family == "F":
        action = VertexAction.from_cycles(6, [(1, 6), (3, 5)])
        return Folding("E6->F4", DynkinType("E", 6), action, ((1, 6), (3, 5), (4,), (2,)), folded)
    if folded.family == "G":
        action = VertexAction.from_cycles(4, [(1, 3, 4)])
        return Folding("D4->G2", DynkinType("D", 4), action, ((2,), (1, 3, 4)), folded)
    raise InputError(f"{folded} is simply laced; there is nothing to fold onto it",
                     fix_hint="Choose a folded type from B, C, F or G")


STANDARD_FOLDING_NAMES = {"A2n-1->Bn": "B", "Dn+1->Cn": "C", "E6->F4": "F", "D4->G2": "G"}


def folding_by_name(name: str, rank: Optional[int] = None) -> Folding:
    """Look up a folding by name (``"E6->F4"``) or by folded type (``"B3"``)."""
    if name in STANDARD_FOLDING_NAMES:
        family = STANDARD_FOLDING_NAMES[name]
        default = {"B": 2, "C": 3, "F": 4, "G": 2}[family]
        return standard_folding(DynkinType(family, rank or default))
    return standard_folding(DynkinType.parse(name))
