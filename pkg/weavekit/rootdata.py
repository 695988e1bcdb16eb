"""Finite-type root-system data.

Dynkin types, Cartan matrices (Humphreys/Bourbaki labeling), Coxeter
numbers, positive and almost positive roots, recognition of finite-type
Cartan matrices, and the tripod bookkeeping used by the N-graph families.

Cartan entries follow c_ij = 2(a_i, a_j)/(a_j, a_j), so that
G2 = [[2, -1], [-3, 2]] and B_n has c_{n-1,n} = -2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import sympy

from .utils.errors import InvalidDynkinType, NotCartanMatrix, RootClosureDiverged


FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_COXETER_SPECIAL = {("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 12, ("G", 2): 6}
_SEED_SPECIAL = {("E", 6): 833, ("E", 7): 4160, ("E", 8): 25080, ("F", 4): 105, ("G", 2): 8}
_CLVAR_SPECIAL = {("E", 6): 42, ("E", 7): 70, ("E", 8): 128, ("F", 4): 28, ("G", 2): 8}


@dataclass(frozen=True, order=True)
class DynkinType:
    """A finite Dynkin type such as A3 or E6."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidDynkinType(f"Unknown Dynkin family: {self.family!r}")
        minimum = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}[self.family]
        if self.rank < minimum:
            raise InvalidDynkinType(f"{self.family}{self.rank}: rank must be at least {minimum}")
        if self.family == "E" and self.rank > 8:
            raise InvalidDynkinType(f"E{self.rank}: rank must be 6, 7 or 8")
        if self.family in ("F", "G") and self.rank != minimum:
            raise InvalidDynkinType(f"{self.family}{self.rank}: rank must be {minimum}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Parse names like ``"A3"``, ``"e6"`` or ``"D_4"``."""
        match = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not match:
            raise InvalidDynkinType(f"Cannot parse Dynkin type: {text!r}",
                                    fix_hint="Use a family letter followed by the rank, e.g. A3 or E6")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")

    def to_json(self) -> Dict[str, object]:
        return {"family": self.family, "rank": self.rank}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "DynkinType":
        return cls(str(data["family"]), int(data["rank"]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    """Square integer matrix, row-major, validated as a generalized Cartan matrix."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise NotCartanMatrix("Cartan matrix must be square")
            if row[i] != 2:
                raise NotCartanMatrix(f"Diagonal entry c[{i + 1}][{i + 1}] = {row[i]} is not 2")
            for j, value in enumerate(row):
                if i == j:
                    continue
                if value > 0:
                    raise NotCartanMatrix(f"Off-diagonal entry c[{i + 1}][{j + 1}] = {value} is positive")
                if (value == 0) != (self.entries[j][i] == 0):
                    raise NotCartanMatrix(f"Entries c[{i + 1}][{j + 1}] and c[{j + 1}][{i + 1}] must vanish together")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "CartanMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def symmetrizer(self) -> Tuple[int, ...]:
        """Positive integers d with diag(d)·C symmetric."""
        return symmetrizer(self.entries, sign=1)

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True, order=True)
class RootVector:
    """Coefficients of a root over the simple roots."""

    coords: Tuple[int, ...]

    @classmethod
    def simple(cls, n: int, i: int) -> "RootVector":
        """Simple root alpha_i, 1-based."""
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @property
    def is_positive(self) -> bool:
        return any(self.coords) and all(c >= 0 for c in self.coords)

    @property
    def is_negative_simple(self) -> bool:
        return sorted(self.coords)[0] == -1 and sum(self.coords) == -1 and all(c <= 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            term = f"a{i}" if abs(c) == 1 else f"{abs(c)}a{i}"
            if c < 0:
                parts.append(f"-{term}")
            else:
                parts.append(f"+{term}" if parts else term)
        return "".join(parts) or "0"


def symmetrizer(rows: Sequence[Sequence[int]], sign: int) -> Tuple[int, ...]:
    """Positive integer vector d with d_i m_ij = sign * d_j m_ji.

    ``sign=1`` symmetrizes a Cartan matrix, ``sign=-1`` skew-symmetrizes an
    exchange matrix. Raises NotCartanMatrix when no such vector exists.
    """
    n = len(rows)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((i, j) for i in range(n) for j in range(n) if i != j and rows[i][j] != 0)
    d: Dict[int, Fraction] = {}
    for component in nx.connected_components(graph):
        root = min(component)
        d[root] = Fraction(1)
        for parent, child in nx.bfs_edges(graph, root):
            # d_child = d_parent * m[parent][child] / (sign * m[child][parent])
            d[child] = d[parent] * Fraction(rows[parent][child], sign * rows[child][parent])
            if d[child] <= 0:
                raise NotCartanMatrix("Matrix is not (skew-)symmetrizable: sign pattern mismatch")
    for i in range(n):
        for j in range(n):
            if i != j and d[i] * rows[i][j] != sign * d[j] * rows[j][i]:
                raise NotCartanMatrix(f"Matrix is not (skew-)symmetrizable at ({i + 1}, {j + 1})")
    scale = lcm(*(value.denominator for value in d.values())) if d else 1
    ints = [int(d[i] * scale) for i in range(n)]
    common = gcd(*ints)
    return tuple(value // (common or 1) for value in ints)


def _dynkin_bonds(t: DynkinType) -> List[Tuple[int, int, int, int]]:
    """Bonds (i, j, c_ij, c_ji) with 1-based labels."""
    n = t.rank
    if t.family == "A":
        return [(i, i + 1, -1, -1) for i in range(1, n)]
    if t.family == "B":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 1, n, -2, -1)]
    if t.family == "C":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 1, n, -1, -2)]
    if t.family == "D":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 2, n, -1, -1)]
    if t.family == "E":
        return [(1, 3, -1, -1), (2, 4, -1, -1)] + [(i, i + 1, -1, -1) for i in range(3, n)]
    if t.family == "F":
        return [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    return [(1, 2, -1, -3)]


def cartan_matrix(t: DynkinType) -> CartanMatrix:
    """Standard Cartan matrix of a finite Dynkin type."""
    n = t.rank
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in _dynkin_bonds(t):
        rows[i - 1][j - 1] = cij
        rows[j - 1][i - 1] = cji
    return CartanMatrix.of(rows)


def coxeter_number(t: DynkinType) -> int:
    """Coxeter number h."""
    if (t.family, t.rank) in _COXETER_SPECIAL:
        return _COXETER_SPECIAL[(t.family, t.rank)]
    if t.family == "A":
        return t.rank + 1
    if t.family in ("B", "C"):
        return 2 * t.rank
    return 2 * t.rank - 2


def seed_count(t: DynkinType) -> int:
    """Number of seeds in a cluster pattern of type t."""
    n = t.rank
    if (t.family, n) in _SEED_SPECIAL:
        return _SEED_SPECIAL[(t.family, n)]
    if t.family == "A":
        return comb(2 * n + 2, n + 1) // (n + 2)
    if t.family in ("B", "C"):
        return comb(2 * n, n)
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


def cluster_variable_count(t: DynkinType) -> int:
    """Number of cluster variables, which equals the number of almost positive roots."""
    n = t.rank
    if (t.family, n) in _CLVAR_SPECIAL:
        return _CLVAR_SPECIAL[(t.family, n)]
    if t.family == "A":
        return n * (n + 3) // 2
    if t.family in ("B", "C"):
        return n * (n + 1)
    return n * n


def reflect(root: RootVector, i: int, cartan: CartanMatrix) -> RootVector:
    """Simple reflection s_i (0-based i): beta - <beta, alpha_i^vee> alpha_i."""
    pairing = sum(root.coords[j] * cartan[j, i] for j in range(cartan.n))
    coords = list(root.coords)
    coords[i] -= pairing
    return RootVector(tuple(coords))


def positive_roots(t: DynkinType) -> List[RootVector]:
    """All positive roots, sorted by height then coordinates."""
    cartan = cartan_matrix(t)
    n = t.rank
    bound = 10 * n * coxeter_number(t)
    found = {RootVector.simple(n, i) for i in range(1, n + 1)}
    frontier = list(found)
    iterations = 0
    while frontier:
        iterations += 1
        if iterations > bound:
            raise RootClosureDiverged(f"Root closure for {t} did not terminate within {bound} rounds")
        fresh = []
        for root in frontier:
            for i in range(n):
                image = reflect(root, i, cartan)
                if image.is_positive and image not in found:
                    found.add(image)
                    fresh.append(image)
        frontier = fresh
    return sorted(found, key=lambda r: (r.height, r.coords))


def almost_positive_roots(t: DynkinType) -> List[RootVector]:
    """Negative simple roots followed by the positive roots."""
    n = t.rank
    negatives = [-RootVector.simple(n, i) for i in range(1, n + 1)]
    return negatives + positive_roots(t)


def _candidate_types(rank: int) -> List[DynkinType]:
    candidates = [DynkinType("A", rank)]
    if rank >= 2:
        candidates.append(DynkinType("B", rank))
    if rank >= 3:
        candidates.append(DynkinType("C", rank))
    if rank >= 4:
        candidates.append(DynkinType("D", rank))
    if 6 <= rank <= 8:
        candidates.append(DynkinType("E", rank))
    if rank == 4:
        candidates.append(DynkinType("F", 4))
    if rank == 2:
        candidates.append(DynkinType("G", 2))
    return candidates


def _bond_digraph(rows: Sequence[Sequence[int]]) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(rows)))
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if i != j and value:
                graph.add_edge(i, j, weight=value)
    return graph


def classify_finite_cartan(cartan: CartanMatrix) -> Optional[List[DynkinType]]:
    """Irreducible components of a finite-type Cartan matrix, or None.

    Positive-definiteness of the symmetrization is decided with exact
    leading principal minors.
    """
    d = cartan.symmetrizer()
    n = cartan.n
    sym = sympy.Matrix(n, n, lambda i, j: d[i] * cartan[i, j])
    for k in range(1, n + 1):
        if sym[:k, :k].det() <= 0:
            return None

    undirected = _bond_digraph(cartan.entries).to_undirected()
    components = sorted(nx.connected_components(undirected), key=min)
    result: List[DynkinType] = []
    for component in components:
        nodes = sorted(component)
        sub = [[cartan[i, j] for j in nodes] for i in nodes]
        target = _bond_digraph(sub)
        for candidate in _candidate_types(len(nodes)):
            reference = _bond_digraph(cartan_matrix(candidate).entries)
            if nx.is_isomorphic(target, reference, edge_match=lambda a, b: a["weight"] == b["weight"]):
                result.append(candidate)
                break
        else:
            return None
    return result


def tripod_type(a: int, b: int, c: int) -> Optional[DynkinType]:
    """Dynkin type of the tripod quiver Q(a,b,c), None for infinite type."""
    p, q, r = sorted((a, b, c))
    if p < 1:
        raise InvalidDynkinType("Tripod parameters must be positive")
    if Fraction(1, p) + Fraction(1, q) + Fraction(1, r) <= 1:
        return None
    if p == 1:
        return DynkinType("A", q + r - 1)
    if q == 2:
        return DynkinType("D", r + 2)
    return DynkinType("E", r + 3)


def tripod_relabeling(a: int, b: int, c: int) -> Dict[int, int]:
    """Map tripod vertex labels to the standard labels of :func:`tripod_type`.

    Tripod labels: 1 is the center, then each arm from the center outward,
    arm a first (a-1 vertices), then arm b, then arm c.
    """
    t = tripod_type(a, b, c)
    if t is None:
        raise InvalidDynkinType(f"Q({a},{b},{c}) is not of finite type")
    arms: List[List[int]] = []
    label = 2
    for p in (a, b, c):
        arms.append(list(range(label, label + p - 1)))
        label += p - 1
    order = sorted(range(3), key=lambda s: (len(arms[s]), s))
    short, middle, long_ = (arms[s] for s in order)
    n = t.rank
    mapping: Dict[int, int] = {}
    if t.family == "A":
        # the shortest arm is empty; the middle arm runs down to 1
        center = len(middle) + 1
        mapping[1] = center
        for step, vertex in enumerate(middle, start=1):
            mapping[vertex] = center - step
        for step, vertex in enumerate(long_, start=1):
            mapping[vertex] = center + step
    elif t.family == "D":
        mapping[1] = n - 2
        mapping[short[0]] = n - 1
        mapping[middle[0]] = n
        for step, vertex in enumerate(long_, start=1):
            mapping[vertex] = n - 2 - step
    else:
        mapping[1] = 4
        mapping[short[0]] = 2
        mapping[middle[0]], mapping[middle[1]] = 3, 1
        for step, vertex in enumerate(long_, start=1):
            mapping[vertex] = 4 + step
    return mapping
