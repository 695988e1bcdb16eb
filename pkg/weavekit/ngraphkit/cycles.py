"""I-, long I- and Y-cycles on N-graphs and their intersection quiver."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..clusterkit.matrix import Quiver
from ..utils.errors import InvalidNGraph, UnsupportedConfiguration
from .graph import NGraph, VertexKind


class CycleKind(Enum):
    I = "I"
    LONG_I = "longI"
    Y_UPPER = "Y_upper"
    Y_LOWER = "Y_lower"

    @property
    def is_y(self) -> bool:
        return self in (CycleKind.Y_UPPER, CycleKind.Y_LOWER)

    @classmethod
    def for_y_color(cls, color: int) -> "CycleKind":
        """Y-cycles on color 1 are upper, those on color 2 lower."""
        return cls.Y_UPPER if color == 1 else cls.Y_LOWER


@dataclass(frozen=True)
class CycleSpec:
    """A cycle given by its edges: a chain for I and long I, the three legs for Y."""

    kind: CycleKind
    edges: Tuple[int, ...]
    label: int
    sign: Optional[str] = None

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "edges": list(self.edges), "label": self.label, "sign": self.sign}

    @classmethod
    def from_json(cls, data: dict) -> "CycleSpec":
        return cls(CycleKind(data["kind"]), tuple(int(e) for e in data["edges"]), int(data["label"]),
                   data.get("sign"))


@dataclass(frozen=True)
class CycleTuple:
    cycles: Tuple[CycleSpec, ...]

    def __post_init__(self) -> None:
        labels = [c.label for c in self.cycles]
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise InvalidNGraph(f"Cycle labels {labels} are not 1..{len(labels)}")

    @classmethod
    def of(cls, cycles: Iterable[CycleSpec]) -> "CycleTuple":
        return cls(tuple(sorted(cycles, key=lambda c: c.label)))

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def by_label(self, k: int) -> CycleSpec:
        if not 1 <= k <= len(self.cycles):
            raise InvalidNGraph(f"No cycle labelled {k}; labels run 1..{len(self.cycles)}")
        return self.cycles[k - 1]

    def replaced(self, spec: CycleSpec) -> "CycleTuple":
        return CycleTuple.of([spec if c.label == spec.label else c for c in self.cycles])

    def relabeled(self, tau: Mapping[int, int]) -> "CycleTuple":
        """Cycle labelled i gets label tau(i); labels missing from tau stay."""
        return CycleTuple.of(replace(c, label=tau.get(c.label, c.label)) for c in self.cycles)

    def remapped(self, emap: Mapping[int, int]) -> "CycleTuple":
        return CycleTuple.of(replace(c, edges=tuple(emap[e] for e in c.edges)) for c in self.cycles)

    def unsigned(self) -> "CycleTuple":
        return CycleTuple.of(replace(c, sign=None) for c in self.cycles)

    def with_signs(self, signs: Mapping[int, Optional[str]]) -> "CycleTuple":
        return CycleTuple.of(replace(c, sign=signs.get(c.label)) for c in self.cycles)

    def signs(self) -> Dict[int, Optional[str]]:
        return {c.label: c.sign for c in self.cycles}

    def color_swapped(self) -> "CycleTuple":
        flip = {CycleKind.Y_UPPER: CycleKind.Y_LOWER, CycleKind.Y_LOWER: CycleKind.Y_UPPER}
        return CycleTuple.of(replace(c, kind=flip.get(c.kind, c.kind)) for c in self.cycles)

    def to_json(self) -> List[dict]:
        return [c.to_json() for c in self.cycles]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "CycleTuple":
        return cls.of(CycleSpec.from_json(item) for item in data)


# shape ---------------------------------------------------------------------

def chain_vertices(g: NGraph, spec: CycleSpec) -> List[int]:
    """Vertices along an I or long I chain, end to end."""
    edges = spec.edges
    first = g.edges[edges[0]]
    if len(edges) == 1:
        return [first.u, first.v]
    second = g.edges[edges[1]]
    start = first.u if first.u not in (second.u, second.v) else first.v
    path = [start]
    for e in edges:
        edge = g.edges[e]
        if path[-1] == edge.u:
            path.append(edge.v)
        elif path[-1] == edge.v:
            path.append(edge.u)
        else:
            raise InvalidNGraph(f"Cycle {spec.label}: edge {e} does not continue the chain")
    return path


def y_center(g: NGraph, spec: CycleSpec) -> int:
    ends = [{g.edges[e].u, g.edges[e].v} for e in spec.edges]
    common = set.intersection(*ends)
    if len(common) != 1:
        raise InvalidNGraph(f"Cycle {spec.label}: the three legs do not meet in one vertex")
    return common.pop()


def cycle_vertices(g: NGraph, spec: CycleSpec) -> List[int]:
    if spec.kind.is_y:
        h = y_center(g, spec)
        return [h] + [_other_end(g, e, h) for e in spec.edges]
    return chain_vertices(g, spec)


def cycle_ends(g: NGraph, spec: CycleSpec) -> List[Tuple[int, int]]:
    """(trivalent endpoint, half-edge of the cycle leaving it) for each end of the cycle."""
    if spec.kind.is_y:
        h = y_center(g, spec)
        ends = []
        for e in spec.edges:
            half = 2 * e if g.edges[e].u != h else 2 * e + 1
            ends.append((g.origin(half), half))
        return ends
    path = chain_vertices(g, spec)
    first, last = spec.edges[0], spec.edges[-1]
    return [(path[0], _half_at(g, first, path[0])), (path[-1], _half_at(g, last, path[-1]))]


def check_cycle(g: NGraph, spec: CycleSpec) -> None:
    """Raise InvalidNGraph unless spec is a good I, long I or Y cycle on g."""
    if not spec.edges:
        raise InvalidNGraph(f"Cycle {spec.label} has no edges")
    for e in spec.edges:
        if not 0 <= e < len(g.edges) or g.edges[e].color == 0:
            raise InvalidNGraph(f"Cycle {spec.label} uses edge {e}, which is not an interior edge")
    if spec.kind.is_y:
        _check_y(g, spec)
        return
    if spec.kind is CycleKind.I and len(spec.edges) != 1:
        raise InvalidNGraph(f"I-cycle {spec.label} must consist of one edge")
    if spec.kind is CycleKind.LONG_I and len(spec.edges) < 2:
        raise InvalidNGraph(f"Long I-cycle {spec.label} needs at least two edges")
    path = chain_vertices(g, spec)
    if len(set(path)) != len(path):
        raise InvalidNGraph(f"Cycle {spec.label} visits a vertex twice")
    for end in (path[0], path[-1]):
        if g.vertices[end].kind is not VertexKind.TRIVALENT:
            raise InvalidNGraph(f"Cycle {spec.label} ends at a {g.vertices[end].kind.value} vertex")
    if g.vertices[path[0]].color != g.vertices[path[-1]].color and len(spec.edges) == 1:
        raise InvalidNGraph(f"I-cycle {spec.label} joins trivalent vertices of different colors")
    for i, v in enumerate(path[1:-1], start=1):
        if g.vertices[v].kind is not VertexKind.HEXAGONAL:
            raise InvalidNGraph(f"Long I-cycle {spec.label} passes through a non-hexagonal vertex {v}")
        into = _half_at(g, spec.edges[i - 1], v)
        out = _half_at(g, spec.edges[i], v)
        if g.turn(into, 3) != out:
            raise InvalidNGraph(f"Long I-cycle {spec.label} does not cross vertex {v} to the opposite edge")


def _check_y(g: NGraph, spec: CycleSpec) -> None:
    if len(spec.edges) != 3:
        raise InvalidNGraph(f"Y-cycle {spec.label} must have three legs")
    h = y_center(g, spec)
    if g.vertices[h].kind is not VertexKind.HEXAGONAL:
        raise InvalidNGraph(f"Y-cycle {spec.label} is not centred at a hexagonal vertex")
    colors = {g.edges[e].color for e in spec.edges}
    if len(colors) != 1:
        raise InvalidNGraph(f"Y-cycle {spec.label} legs are not monochromatic")
    color = colors.pop()
    if spec.kind is not CycleKind.for_y_color(color) and g.N == 3:
        raise InvalidNGraph(f"Y-cycle {spec.label} on color {color} must have kind "
                            f"{CycleKind.for_y_color(color).value}")
    for e in spec.edges:
        end = _other_end(g, e, h)
        if g.vertices[end].kind is not VertexKind.TRIVALENT:
            raise InvalidNGraph(f"Y-cycle {spec.label} leg {e} does not end at a trivalent vertex")


def _other_end(g: NGraph, e: int, v: int) -> int:
    edge = g.edges[e]
    return edge.v if edge.u == v else edge.u


def _half_at(g: NGraph, e: int, v: int) -> int:
    """Half-edge of e leaving v."""
    return 2 * e if g.edges[e].u == v else 2 * e + 1


# intersection quiver -----------------------------------------------------------

def intersection_number(g: NGraph, first: CycleSpec, second: CycleSpec) -> int:
    """Signed count at shared trivalent endpoints.

    At a shared endpoint the contribution is +1 when the second cycle's edge
    follows the first one's counterclockwise, and -1 otherwise.
    """
    shared = set(cycle_vertices(g, first)) & set(cycle_vertices(g, second))
    if not shared:
        return 0
    ends_first = dict(cycle_ends(g, first))
    ends_second = dict(cycle_ends(g, second))
    total = 0
    for v in shared:
        if v not in ends_first or v not in ends_second:
            raise UnsupportedConfiguration(
                f"Cycles {first.label} and {second.label} meet at vertex {v} away from their trivalent ends")
        h, k = ends_first[v], ends_second[v]
        if h == k:
            raise UnsupportedConfiguration(f"Cycles {first.label} and {second.label} share the edge {h >> 1}")
        total += 1 if g.turn(h, 1) == k else -1
    return total


def intersection_matrix(g: NGraph, cycles: CycleTuple) -> List[List[int]]:
    n = len(cycles)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = intersection_number(g, cycles.cycles[i], cycles.cycles[j])
            rows[i][j] = value
            rows[j][i] = -value
    return rows


def quiver_of(g: NGraph, cycles: CycleTuple) -> Quiver:
    """Quiver with b_ij the signed intersection of cycles i and j."""
    for spec in cycles:
        check_cycle(g, spec)
    rows = intersection_matrix(g, cycles)
    return Quiver(tuple(tuple(r) for r in rows), len(rows))


def bipartite_signs(quiver: Quiver) -> Dict[int, str]:
    """'+' on sources and '-' on sinks; isolated vertices count as sources."""
    signs = {}
    for i, row in enumerate(quiver.adjacency, start=1):
        signs[i] = "-" if any(v < 0 for v in row) else "+"
    return signs
