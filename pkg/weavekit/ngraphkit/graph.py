"""Half-edge maps of N-graphs on the disk and on the annulus.

Edge ``e`` owns the half-edges ``2e`` (leaving ``edges[e].u``) and ``2e + 1``
(leaving ``edges[e].v``), so the twin of ``h`` is ``h ^ 1``. Each vertex
lists its half-edges counterclockwise. Boundary arcs are edges of color 0.

An outer boundary vertex rotates as ``[arc to next, strand, arc to previous]``
and an inner (annulus) boundary vertex as ``[strand, arc to next, arc to
previous]``, where "next" is the counterclockwise neighbour on its circle.
Faces are traced with the face on the left: the successor of ``h`` is the
half-edge clockwise after ``twin(h)`` at its origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Type, TypeVar

import networkx as nx

from ..utils.errors import InvalidNGraph
from .braid import BraidWord


class VertexKind(Enum):
    TRIVALENT = "trivalent"
    HEXAGONAL = "hexagonal"
    CROSSING = "crossing"
    BOUNDARY = "boundary"
    INNER_BOUNDARY = "inner_boundary"


@dataclass(frozen=True)
class Vertex:
    """Vertex type; ``color`` is the trivalent color, the lower hexagonal color, or 0 on the boundary."""

    kind: VertexKind
    color: int = 0

    @property
    def on_boundary(self) -> bool:
        return self.kind in (VertexKind.BOUNDARY, VertexKind.INNER_BOUNDARY)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    color: int


@dataclass(frozen=True)
class Face:
    """A face of the map.

    ``arcs`` and ``inner_arcs`` list the boundary intervals the face touches:
    arc k lies between boundary positions k and k + 1.
    """

    index: int
    half_edges: Tuple[int, ...]
    arcs: Tuple[int, ...] = ()
    inner_arcs: Tuple[int, ...] = ()
    outside: bool = False

    @property
    def interior(self) -> bool:
        return not self.outside and not self.arcs and not self.inner_arcs


G = TypeVar("G", bound="NGraph")


@dataclass(frozen=True)
class NGraph:
    """Immutable N-graph; build instances with :class:`MapBuilder`."""

    N: int
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    rotation: Tuple[Tuple[int, ...], ...]
    boundary: Tuple[int, ...]
    inner: Tuple[int, ...] = ()
    # ("tripod", a, b, c, depth) for the standard Coxeter stacks
    family: Optional[Tuple] = field(default=None, compare=False)

    # half-edge navigation ------------------------------------------------

    def origin(self, h: int) -> int:
        edge = self.edges[h >> 1]
        return edge.v if h & 1 else edge.u

    def target(self, h: int) -> int:
        return self.origin(h ^ 1)

    def color(self, h: int) -> int:
        return self.edges[h >> 1].color

    def slot(self, h: int) -> int:
        """Index of h in the rotation at its origin."""
        return self.rotation[self.origin(h)].index(h)

    def turn(self, h: int, steps: int) -> int:
        """Half-edge ``steps`` positions counterclockwise from h at its origin."""
        around = self.rotation[self.origin(h)]
        return around[(around.index(h) + steps) % len(around)]

    def face_next(self, h: int) -> int:
        return self.turn(h ^ 1, -1)

    def half_edges_at(self, v: int) -> Tuple[int, ...]:
        return self.rotation[v]

    def edge_between(self, h: int) -> Tuple[int, int]:
        return self.origin(h), self.target(h)

    # boundary ---------------------------------------------------------------

    @property
    def is_annular(self) -> bool:
        return bool(self.inner)

    def strand_at(self, b: int) -> int:
        """Strand half-edge leaving a boundary vertex."""
        kind = self.vertices[b].kind
        if kind is VertexKind.BOUNDARY:
            return self.rotation[b][1]
        if kind is VertexKind.INNER_BOUNDARY:
            return self.rotation[b][0]
        raise InvalidNGraph(f"Vertex {b} is not a boundary vertex")

    def arc_half_edge(self, k: int, inner: bool = False) -> int:
        """Half-edge along arc k with the surface on its left."""
        if inner:
            L = len(self.inner)
            return self.rotation[self.inner[(k + 1) % L]][2]
        return self.rotation[self.boundary[k]][0]

    def boundary_word(self) -> BraidWord:
        return BraidWord(self.N, tuple(self.color(self.strand_at(b)) for b in self.boundary))

    def inner_word(self) -> BraidWord:
        return BraidWord(self.N, tuple(self.color(self.strand_at(b)) for b in self.inner))

    # faces ------------------------------------------------------------------

    def faces(self) -> List[Face]:
        """Faces traced from the rotation system, the outer face and the hole included."""
        arc_of: Dict[int, int] = {self.arc_half_edge(k): k for k in range(len(self.boundary))}
        inner_arc_of: Dict[int, int] = {self.arc_half_edge(k, True): k for k in range(len(self.inner))}
        outside = {self.rotation[b][2] for b in self.boundary}
        outside |= {self.rotation[b][1] for b in self.inner}
        seen = set()
        found: List[Face] = []
        for start in range(2 * len(self.edges)):
            if start in seen:
                continue
            cycle = []
            h = start
            while h not in seen:
                seen.add(h)
                cycle.append(h)
                h = self.face_next(h)
            if h != start:
                raise InvalidNGraph("Face traversal did not close up; the rotation system is inconsistent")
            found.append(Face(
                index=len(found),
                half_edges=tuple(cycle),
                arcs=tuple(sorted(arc_of[x] for x in cycle if x in arc_of)),
                inner_arcs=tuple(sorted(inner_arc_of[x] for x in cycle if x in inner_arc_of)),
                outside=any(x in outside for x in cycle),
            ))
        return found

    def face_of(self) -> Dict[int, int]:
        """Map from half-edge to the index of the face on its left."""
        return {h: face.index for face in self.faces() for h in face.half_edges}

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for v, vertex in enumerate(self.vertices):
            graph.add_node(v, kind=vertex.kind.value, color=vertex.color)
        for e, edge in enumerate(self.edges):
            graph.add_edge(edge.u, edge.v, key=e, color=edge.color)
        return graph

    def edit(self) -> "MapBuilder":
        return MapBuilder.from_graph(self)

    def __str__(self) -> str:
        shape = "annular " if self.is_annular else ""
        return (f"{shape}{self.N}-graph: {len(self.vertices)} vertices, {len(self.edges)} edges, "
                f"boundary {self.boundary_word()}")


def euler_characteristic(g: NGraph) -> int:
    """V - E + F over the faces inside the surface (1 for a connected disk, 0 for an annulus)."""
    inside = [f for f in g.faces() if not f.outside]
    return len(g.vertices) - len(g.edges) + len(inside)


def validate(g: NGraph) -> None:
    """Raise InvalidNGraph unless g satisfies every structural invariant of an N-graph."""
    if not g.boundary:
        raise InvalidNGraph("An N-graph needs at least one boundary endpoint")
    seen: Dict[int, int] = {}
    for v, around in enumerate(g.rotation):
        for h in around:
            if not 0 <= h < 2 * len(g.edges):
                raise InvalidNGraph(f"Vertex {v} lists unknown half-edge {h}")
            if g.origin(h) != v:
                raise InvalidNGraph(f"Half-edge {h} is listed at {v} but leaves {g.origin(h)}")
            if h in seen:
                raise InvalidNGraph(f"Half-edge {h} appears twice in the rotation system")
            seen[h] = v
    if len(seen) != 2 * len(g.edges):
        missing = sorted(set(range(2 * len(g.edges))) - set(seen))
        raise InvalidNGraph(f"Half-edges {missing[:6]} are missing from the rotation system")
    for e, edge in enumerate(g.edges):
        if edge.u == edge.v:
            raise InvalidNGraph(f"Edge {e} is a loop")
        if not 0 <= edge.color < g.N:
            raise InvalidNGraph(f"Edge {e} has color {edge.color} outside 1..{g.N - 1}")
    for v, vertex in enumerate(g.vertices):
        _check_vertex(g, v, vertex)
    for ring, kind, arc_slots in ((g.boundary, VertexKind.BOUNDARY, (0, 2)),
                                  (g.inner, VertexKind.INNER_BOUNDARY, (1, 2))):
        L = len(ring)
        for k, b in enumerate(ring):
            if g.vertices[b].kind is not kind:
                raise InvalidNGraph(f"Boundary position {k} holds a {g.vertices[b].kind.value} vertex")
            to_next, to_prev = (g.rotation[b][s] for s in arc_slots)
            if g.target(to_next) != ring[(k + 1) % L] or g.target(to_prev) != ring[(k - 1) % L]:
                raise InvalidNGraph(f"Boundary arcs at position {k} do not join the neighbouring endpoints")
    listed = set(g.boundary) | set(g.inner)
    if len(listed) != len(g.boundary) + len(g.inner):
        raise InvalidNGraph("A boundary vertex is listed twice")
    unlisted = [v for v, vertex in enumerate(g.vertices) if vertex.on_boundary and v not in listed]
    if unlisted:
        raise InvalidNGraph(f"Boundary vertices {unlisted} are not on any boundary circle")
    faces = g.faces()
    components = nx.number_connected_components(g.to_networkx())
    if len(g.vertices) - len(g.edges) + len(faces) != 2 * components:
        raise InvalidNGraph("Euler relation fails: the rotation system does not describe a planar map")


def _check_vertex(g: NGraph, v: int, vertex: Vertex) -> None:
    around = g.rotation[v]
    colors = [g.color(h) for h in around]
    kind = vertex.kind
    if kind is VertexKind.TRIVALENT:
        if len(around) != 3 or set(colors) != {vertex.color} or vertex.color == 0:
            raise InvalidNGraph(f"Trivalent vertex {v} must carry three edges of color {vertex.color}")
    elif kind is VertexKind.HEXAGONAL:
        c = vertex.color
        if len(around) != 6 or sorted(set(colors)) != [c, c + 1] or c == 0:
            raise InvalidNGraph(f"Hexagonal vertex {v} must carry six edges of colors {c}, {c + 1}")
        if any(colors[k] == colors[(k + 1) % 6] for k in range(6)):
            raise InvalidNGraph(f"Colors around hexagonal vertex {v} do not alternate")
    elif kind is VertexKind.CROSSING:
        if len(around) != 4 or colors[0] != colors[2] or colors[1] != colors[3] or abs(colors[0] - colors[1]) <= 1:
            raise InvalidNGraph(f"Crossing vertex {v} must join two strands whose colors differ by more than 1")
    else:
        arcs = (0, 2) if kind is VertexKind.BOUNDARY else (1, 2)
        strand = 1 if kind is VertexKind.BOUNDARY else 0
        if len(around) != 3 or any(colors[s] != 0 for s in arcs) or colors[strand] == 0:
            raise InvalidNGraph(f"Boundary vertex {v} must carry one strand between its two arcs")


class MapBuilder:
    """Mutable half-edge map used by constructors and surgeries.

    Vertex and edge ids are stable while editing; :meth:`freeze` renumbers
    them densely and reports the edge renumbering so cycles can follow.
    """

    def __init__(self, N: int) -> None:
        self.N = N
        self.vertices: Dict[int, Vertex] = {}
        self.ends: Dict[int, List[int]] = {}
        self.colors: Dict[int, int] = {}
        self.rotation: Dict[int, List[Optional[int]]] = {}
        self.boundary: List[int] = []
        self.inner: List[int] = []
        self._next_vertex = 0
        self._next_edge = 0

    @classmethod
    def from_graph(cls, g: NGraph) -> "MapBuilder":
        builder = cls(g.N)
        for v, vertex in enumerate(g.vertices):
            builder.vertices[v] = vertex
            builder.rotation[v] = list(g.rotation[v])
        for e, edge in enumerate(g.edges):
            builder.ends[e] = [edge.u, edge.v]
            builder.colors[e] = edge.color
        builder.boundary = list(g.boundary)
        builder.inner = list(g.inner)
        builder._next_vertex = len(g.vertices)
        builder._next_edge = len(g.edges)
        return builder

    def add_vertex(self, kind: VertexKind, color: int = 0, degree: int = 0) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        self.vertices[v] = Vertex(kind, color)
        self.rotation[v] = [None] * degree
        return v

    def add_edge(self, u: int, v: int, color: int,
                 slots: Optional[Tuple[int, int]] = None) -> int:
        """New edge u-v; with ``slots`` its half-edges fill those rotation positions."""
        e = self._next_edge
        self._next_edge += 1
        self.ends[e] = [u, v]
        self.colors[e] = color
        if slots is not None:
            self.rotation[u][slots[0]] = 2 * e
            self.rotation[v][slots[1]] = 2 * e + 1
        return e

    def origin(self, h: int) -> int:
        return self.ends[h >> 1][h & 1]

    def target(self, h: int) -> int:
        return self.ends[h >> 1][(h & 1) ^ 1]

    def color(self, h: int) -> int:
        return self.colors[h >> 1]

    def set_rotation(self, v: int, around: Sequence[int]) -> None:
        """Replace the rotation at v and move every listed half-edge there."""
        for h in around:
            self.ends[h >> 1][h & 1] = v
        self.rotation[v] = list(around)

    def replace(self, old: int, new: int) -> None:
        """Put half-edge ``new`` where ``old`` sits in the rotation at old's origin."""
        v = self.origin(old)
        around = self.rotation[v]
        around[around.index(old)] = new
        self.ends[new >> 1][new & 1] = v

    def remove_edge(self, e: int) -> None:
        """Drop edge e, leaving its rotation slots empty for :meth:`freeze` to reject if still unfilled."""
        for side in (0, 1):
            h = 2 * e + side
            around = self.rotation.get(self.ends[e][side])
            if around is not None and h in around:
                around[around.index(h)] = None
        del self.ends[e]
        del self.colors[e]

    def remove_vertex(self, v: int) -> None:
        """Drop v; its incident edges must already be gone or re-homed."""
        leftover = [h for h in self.rotation[v] if h is not None and (h >> 1) in self.ends
                    and self.origin(h) == v]
        if leftover:
            raise InvalidNGraph(f"Vertex {v} still has half-edges {leftover}")
        del self.vertices[v]
        del self.rotation[v]

    def link_boundary(self, ring: Sequence[int], inner: bool = False) -> None:
        """Create the arcs of a boundary circle whose vertices already hold their strands."""
        L = len(ring)
        next_slot, prev_slot = (1, 2) if inner else (0, 2)
        for k, b in enumerate(ring):
            nxt = ring[(k + 1) % L]
            self.add_edge(b, nxt, 0, slots=(next_slot, prev_slot))
        if inner:
            self.inner = list(ring)
        else:
            self.boundary = list(ring)

    def strip_arcs(self, ring: Sequence[int]) -> None:
        for b in ring:
            for h in list(self.rotation[b]):
                if h is not None and (h >> 1) in self.ends and self.colors[h >> 1] == 0:
                    self.remove_edge(h >> 1)

    def freeze(self, cls: Type[G] = NGraph, family: Optional[Tuple] = None,
               check: bool = True) -> Tuple[G, Dict[int, int]]:
        """Dense renumbering; returns the graph and the old-to-new edge map."""
        vmap = {v: i for i, v in enumerate(sorted(self.vertices))}
        emap = {e: i for i, e in enumerate(sorted(self.ends))}

        def half(h: Optional[int]) -> int:
            if h is None or (h >> 1) not in emap:
                raise InvalidNGraph("Rotation system refers to a missing edge")
            return 2 * emap[h >> 1] + (h & 1)

        vertices = tuple(self.vertices[v] for v in sorted(self.vertices))
        edges = tuple(Edge(vmap[self.ends[e][0]], vmap[self.ends[e][1]], self.colors[e]) for e in sorted(self.ends))
        rotation = tuple(tuple(half(h) for h in self.rotation[v]) for v in sorted(self.vertices))
        g = cls(self.N, vertices, edges, rotation,
                tuple(vmap[b] for b in self.boundary), tuple(vmap[b] for b in self.inner), family)
        if check:
            validate(g)
        return g, emap


def disjoint_union(builder: MapBuilder, g: NGraph) -> Tuple[Dict[int, int], Dict[int, int]]:
    """Copy g into builder; returns the vertex and edge id maps."""
    vmap: Dict[int, int] = {}
    for v, vertex in enumerate(g.vertices):
        vmap[v] = builder.add_vertex(vertex.kind, vertex.color, len(g.rotation[v]))
    emap: Dict[int, int] = {}
    for e, edge in enumerate(g.edges):
        emap[e] = builder.add_edge(vmap[edge.u], vmap[edge.v], edge.color)
    for v, around in enumerate(g.rotation):
        builder.rotation[vmap[v]] = [2 * emap[h >> 1] + (h & 1) for h in around]
    return vmap, emap


def cyclic_slice(items: Sequence, start: int) -> List:
    """``items`` read cyclically from ``start``."""
    n = len(items)
    return [items[(start + k) % n] for k in range(n)]


def strand_colors(g: NGraph, vertices: Iterable[int]) -> List[int]:
    return [g.color(g.strand_at(b)) for b in vertices]
