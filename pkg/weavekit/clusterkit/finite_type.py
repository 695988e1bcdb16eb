"""Standard bipartite seeds of finite type and finite-type detection."""

from __future__ import annotations

import logging
from collections import deque
from typing import List, Optional, Set, Tuple

import networkx as nx

from ..rootdata import DynkinType, cartan_matrix, classify_finite_cartan
from ..utils.errors import CapExceeded
from .matrix import ExchangeMatrix, cartan_counterpart, mutate_matrix
from .seeds import Seed, initial_seed

logger = logging.getLogger(__name__)


def _anchor(t: DynkinType) -> int:
    """Vertex whose bipartite class is made of sources."""
    if t.family == "A":
        return 2 if t.rank >= 2 else 1
    if t.family == "D":
        return t.rank - 2
    if t.family == "E":
        return 4
    return 1


def source_vertices(t: DynkinType) -> Tuple[int, ...]:
    """Vertices at even distance from the anchor in the Dynkin diagram."""
    cartan = cartan_matrix(t)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, t.rank + 1))
    graph.add_edges_from((i + 1, j + 1) for i in range(t.rank) for j in range(i) if cartan[i, j])
    distance = nx.single_source_shortest_path_length(graph, _anchor(t))
    return tuple(sorted(v for v, d in distance.items() if d % 2 == 0))


def dynkin_matrix(t: DynkinType) -> ExchangeMatrix:
    """Bipartite exchange matrix with Cartan counterpart of type t.

    b_ij = -c_ij when i is a source and c_ij when i is a sink.
    """
    cartan = cartan_matrix(t)
    plus = set(source_vertices(t))
    n = t.rank
    rows = [
        [0 if i == j else (-cartan[i, j] if i + 1 in plus else cartan[i, j]) for j in range(n)]
        for i in range(n)
    ]
    return ExchangeMatrix.of(rows)


def dynkin_seed(t: DynkinType) -> Seed:
    return initial_seed(dynkin_matrix(t))


def _has_cycle(matrix: ExchangeMatrix) -> bool:
    n = matrix.n
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((i, j) for i in range(n) for j in range(i) if matrix.entries[i][j])
    return not nx.is_forest(graph)


def detect_finite_type(matrix: ExchangeMatrix, cap: int) -> Optional[List[DynkinType]]:
    """Finite-type components of the mutation class of the principal part, or None.

    Searches the mutation class breadth-first for a matrix whose Cartan
    counterpart is of finite type. A product |b_ij b_ji| >= 4 anywhere
    certifies infinite type.
    """
    start = matrix.principal()
    seen: Set[Tuple[Tuple[int, ...], ...]] = {start.entries}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        n = current.n
        if any(abs(current.entries[i][j] * current.entries[j][i]) >= 4 for i in range(n) for j in range(n)):
            logger.debug("Infinite type witnessed by a heavy pair after %d matrices", len(seen))
            return None
        if not _has_cycle(current):
            found = classify_finite_cartan(cartan_counterpart(current))
            if found is not None:
                return found
        for k in range(1, n + 1):
            neighbour = mutate_matrix(current, k)
            if neighbour.entries not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"No finite-type representative among {cap} matrices",
                                      fix_hint="Raise the finite-type search cap")
                seen.add(neighbour.entries)
                queue.append(neighbour)
    return None
