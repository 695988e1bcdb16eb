"""Exchange matrices, quivers and their mutations.

An :class:`ExchangeMatrix` keeps the n x m shape: rows are the mutable
directions, columns run over all m vertices (mutable first, frozen after).
Indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..rootdata import CartanMatrix, NotCartanMatrix, symmetrizer
from ..utils.errors import FrozenDirection, NotSkewSymmetrizable


@dataclass(frozen=True)
class ExchangeMatrix:
    """Integer n x m exchange matrix with skew-symmetrizable principal part."""

    entries: Tuple[Tuple[int, ...], ...]
    m: int = field(default=-1)

    def __post_init__(self) -> None:
        rows = self.entries
        width = len(rows[0]) if rows else max(self.m, 0)
        if self.m < 0:
            object.__setattr__(self, "m", width)
        if any(len(row) != self.m for row in rows):
            raise ValueError("Every row of an exchange matrix must have m entries")
        if self.m < len(rows):
            raise ValueError("An exchange matrix needs m >= n")
        n = len(rows)
        for i in range(n):
            if rows[i][i] != 0:
                raise NotSkewSymmetrizable(f"Diagonal entry b[{i + 1}][{i + 1}] must be 0")
        try:
            d = symmetrizer([row[:n] for row in rows], sign=-1)
        except NotCartanMatrix as exc:
            raise NotSkewSymmetrizable(str(exc))
        object.__setattr__(self, "_d", d)

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]], m: Optional[int] = None) -> "ExchangeMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        return cls(entries, -1 if m is None else m)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "ExchangeMatrix":
        return cls.of(array.tolist(), m=int(array.shape[1]))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def d(self) -> Tuple[int, ...]:
        """Skew-symmetrizer of the principal part."""
        return self._d  # type: ignore[attr-defined]

    @property
    def is_skew_symmetric(self) -> bool:
        return all(self.entries[i][j] == -self.entries[j][i] for i in range(self.n) for j in range(self.n))

    @cached_property
    def array(self) -> np.ndarray:
        values = np.array(self.entries, dtype=np.int64).reshape(self.n, self.m)
        values.setflags(write=False)
        return values

    def b(self, i: int, j: int) -> int:
        """Entry b_{i,j}; rows beyond n are read off by skew-symmetry when the part is skew-symmetric."""
        if 1 <= i <= self.n:
            return self.entries[i - 1][j - 1]
        if 1 <= j <= self.n and self.is_skew_symmetric:
            return -self.entries[j - 1][i - 1]
        if i > self.n and j > self.n:
            return 0
        raise KeyError(f"b[{i}][{j}] is not determined by an n x m exchange matrix")

    def principal(self) -> "ExchangeMatrix":
        return ExchangeMatrix.of((row[: self.n] for row in self.entries), m=self.n)

    def row(self, k: int) -> Tuple[int, ...]:
        return self.entries[k - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "entries": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "ExchangeMatrix":
        return cls.of(data["entries"], m=int(data["m"]))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.entries) + "]"


def check_direction(matrix: ExchangeMatrix, k: int) -> None:
    if not 1 <= k <= matrix.n:
        raise FrozenDirection(f"Direction {k} is frozen or out of range 1..{matrix.n}")


def mutate_array(B: np.ndarray, c: int) -> np.ndarray:
    """Mutation formula on a rectangular array at 0-based index c (a row and a column)."""
    col = B[:, c]
    row = B[c, :]
    # b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
    mutated = B + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    mutated[c, :] = -row
    mutated[:, c] = -col
    return mutated


def mutate_matrix(matrix: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at direction k (1-based)."""
    check_direction(matrix, k)
    return ExchangeMatrix.from_array(mutate_array(matrix.array, k - 1))


def cartan_counterpart(matrix: ExchangeMatrix) -> CartanMatrix:
    """C(B^pr): 2 on the diagonal, -|b_ij| elsewhere."""
    n = matrix.n
    return CartanMatrix.of(
        [[2 if i == j else -abs(matrix.entries[i][j]) for j in range(n)] for i in range(n)]
    )


@dataclass(frozen=True)
class Quiver:
    """Quiver on m vertices whose first n vertices are mutable.

    Stored as its skew-symmetric m x m adjacency; arrows between two frozen
    vertices are not kept.
    """

    adjacency: Tuple[Tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        m = len(self.adjacency)
        for i in range(m):
            if self.adjacency[i][i]:
                raise ValueError(f"Quiver has a loop at vertex {i + 1}")
            for j in range(m):
                if self.adjacency[i][j] != -self.adjacency[j][i]:
                    raise ValueError("Quiver adjacency must be skew-symmetric")
                if i >= self.n and j >= self.n and self.adjacency[i][j]:
                    raise ValueError("Arrows between frozen vertices are not supported")

    @classmethod
    def from_arrows(cls, m: int, arrows: Iterable[Tuple[int, int]], n: Optional[int] = None) -> "Quiver":
        """Build from 1-based arrows (i, j); repeated arrows add multiplicity."""
        rows = [[0] * m for _ in range(m)]
        for i, j in arrows:
            rows[i - 1][j - 1] += 1
            rows[j - 1][i - 1] -= 1
        return cls(tuple(tuple(r) for r in rows), m if n is None else n)

    @classmethod
    def from_matrix(cls, matrix: ExchangeMatrix) -> "Quiver":
        if not matrix.is_skew_symmetric:
            raise NotSkewSymmetrizable("Only skew-symmetric principal parts define quivers")
        m = matrix.m
        rows = [[matrix.b(i, j) if (i <= matrix.n or j <= matrix.n) else 0 for j in range(1, m + 1)]
                for i in range(1, m + 1)]
        return cls(tuple(tuple(r) for r in rows), matrix.n)

    @property
    def m(self) -> int:
        return len(self.adjacency)

    @property
    def matrix(self) -> ExchangeMatrix:
        return ExchangeMatrix.of(self.adjacency[: self.n], m=self.m)

    def arrows(self) -> List[Tuple[int, int, int]]:
        """(source, target, multiplicity), 1-based, sorted."""
        return [(i + 1, j + 1, v) for i, row in enumerate(self.adjacency) for j, v in enumerate(row) if v > 0]

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.m + 1))
        for i, j, mult in self.arrows():
            graph.add_edge(i, j, multiplicity=mult)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_digraph())

    def opposite(self) -> "Quiver":
        return Quiver(tuple(tuple(-v for v in row) for row in self.adjacency), self.n)

    def relabel(self, perm: Sequence[int]) -> "Quiver":
        """Quiver whose vertex perm[i] plays the role of vertex i+1 (1-based images)."""
        m = self.m
        rows = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                rows[perm[i] - 1][perm[j] - 1] = self.adjacency[i][j]
        return Quiver(tuple(tuple(r) for r in rows), self.n)

    def __str__(self) -> str:
        arrows = ", ".join(f"{i}->{j}" if mult == 1 else f"{i}={mult}=>{j}" for i, j, mult in self.arrows())
        return f"Quiver(m={self.m}, n={self.n}: {arrows or 'no arrows'})"


def mutate_quiver(quiver: Quiver, k: int) -> Quiver:
    """Quiver mutation at a mutable vertex k."""
    if not 1 <= k <= quiver.n:
        raise FrozenDirection(f"Vertex {k} is frozen or out of range 1..{quiver.n}")
    A = np.array(quiver.adjacency, dtype=np.int64).reshape(quiver.m, quiver.m)
    mutated = mutate_array(A, k - 1)
    n = quiver.n
    mutated[n:, n:] = 0
    return Quiver(tuple(tuple(int(v) for v in r) for r in mutated.tolist()), n)


def bipartite_split(source) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Source/sink bipartition (I_plus, I_minus) of the mutable part, or None.

    Vertices without arrows go to I_plus.
    """
    matrix = source.matrix if isinstance(source, Quiver) else source
    n = matrix.n
    plus, minus = [], []
    for i in range(n):
        outgoing = any(matrix.entries[i][j] > 0 for j in range(n))
        incoming = any(matrix.entries[i][j] < 0 for j in range(n))
        if outgoing and incoming:
            return None
        (minus if incoming else plus).append(i + 1)
    return tuple(plus), tuple(minus)


def linear_quiver(n: int) -> Quiver:
    """Alternating A_n path 1 -> 2 <- 3 -> 4 ..."""
    arrows = []
    for i in range(1, n):
        arrows.append((i, i + 1) if i % 2 == 1 else (i + 1, i))
    return Quiver.from_arrows(n, arrows)


def tripod_quiver(a: int, b: int, c: int) -> Quiver:
    """Bipartite tripod Q(a,b,c): center 1 is a source, arms alternate outward."""
    if min(a, b, c) < 1:
        raise ValueError("Tripod parameters must be positive")
    n = a + b + c - 2
    arrows = []
    label = 2
    for p in (a, b, c):
        previous = 1
        for step in range(p - 1):
            current = label + step
            arrows.append((previous, current) if step % 2 == 0 else (current, previous))
            previous = current
        label += p - 1
    return Quiver.from_arrows(n, arrows)
