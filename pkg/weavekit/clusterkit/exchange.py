"""Breadth-first enumeration of exchange graphs."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Set, Tuple

import networkx as nx

from ..utils.errors import CapExceeded
from .laurent import LaurentPoly
from .seeds import ClusterKey, ExchangeCache, Seed, mutate_seed

logger = logging.getLogger(__name__)

Edge = Tuple[ClusterKey, ClusterKey, int]

PROGRESS_EVERY = 5_000


@dataclass
class ExchangeGraph:
    """Vertices are unordered clusters; each edge records the direction used from its first end."""

    initial: ClusterKey
    vertices: Dict[ClusterKey, Seed] = field(default_factory=dict)
    edges: List[Edge] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return self.vertices[self.initial].n

    def cluster_variables(self) -> Set[LaurentPoly]:
        """Distinct mutable cluster variables over all seeds."""
        found: Set[LaurentPoly] = set()
        for seed in self.vertices.values():
            found.update(seed.mutable)
        return found

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for left, right, k in self.edges:
            graph.add_edge(left, right, direction=k)
        return graph

    def is_regular(self) -> bool:
        """Every vertex has exactly n neighbours."""
        graph = self.to_networkx()
        return all(degree == self.rank for _, degree in graph.degree())

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def _labels(self) -> Dict[ClusterKey, int]:
        # initial cluster first, then discovery order
        return {key: index for index, key in enumerate(self.vertices)}

    def to_json(self) -> dict:
        labels = self._labels()
        return {
            "rank": self.rank,
            "vertices": [
                {"id": labels[key], "cluster": [v.to_json() for v in seed.mutable]}
                for key, seed in self.vertices.items()
            ],
            "edges": [[labels[a], labels[b], k] for a, b, k in self.edges],
        }

    def to_dot(self, name: str = "exchange") -> str:
        labels = self._labels()
        lines = [f'{labels[key]} [label="{labels[key]}"];' for key in self.vertices]
        lines += [f'{labels[a]} -- {labels[b]} [label="{k}"];' for a, b, k in self.edges]
        return "\n".join([f"graph {name} {{", "node [shape=circle];", *lines, "}"]) + "\n"


def enumerate_exchange_graph(
    seed: Seed,
    cap: int,
    on_progress: Optional[Callable[[int], None]] = None,
    cache: Optional[ExchangeCache] = None,
) -> ExchangeGraph:
    """Explore all mutation directions breadth-first, merging seeds with the same cluster.

    Raises CapExceeded once more than ``cap`` clusters have been found.
    """
    if cache is None:
        cache = ExchangeCache()
    seed = cache.intern_seed(seed)
    graph = ExchangeGraph(initial=seed.key)
    graph.vertices[seed.key] = seed
    seen_edges: Set[frozenset] = set()
    # direction leading back to the parent, skipped when expanding
    parent_direction: Dict[ClusterKey, int] = {seed.key: 0}
    queue = deque([seed.key])

    while queue:
        key = queue.popleft()
        current = graph.vertices[key]
        for k in range(1, current.n + 1):
            if k == parent_direction[key]:
                continue
            neighbour = mutate_seed(current, k, cache)
            target = neighbour.key
            if target not in graph.vertices:
                if len(graph.vertices) >= cap:
                    raise CapExceeded(f"Exchange graph has more than {cap} vertices")
                graph.vertices[target] = neighbour
                parent_direction[target] = k
                queue.append(target)
                if on_progress and len(graph.vertices) % PROGRESS_EVERY == 0:
                    on_progress(len(graph.vertices))
                if len(graph.vertices) % PROGRESS_EVERY == 0:
                    logger.info("%d clusters found, %d queued", len(graph.vertices), len(queue))
            pair = frozenset((key, target))
            if pair not in seen_edges:
                seen_edges.add(pair)
                graph.edges.append((key, target, k))

    logger.info(
        "Exchange graph complete: %d clusters, %d edges, %d divisions, %d memo hits",
        len(graph.vertices), len(graph.edges), cache.divisions, cache.hits,
    )
    return graph
