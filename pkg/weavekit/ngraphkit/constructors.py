"""Standard N-graphs: the linear 2-graphs, the tripod 3-graphs and a graph with an interior face."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from ..utils.errors import InputError
from .cycles import CycleKind, CycleSpec, CycleTuple
from .graph import MapBuilder, NGraph, Vertex, VertexKind

# Leg = (vertex, rotation slot, color) still waiting for its boundary endpoint.
Leg = Tuple[int, int, int]


def _attach_boundary(builder: MapBuilder, legs: Sequence[Leg]) -> List[int]:
    """One boundary vertex per leg, in the given counterclockwise order, joined by arcs."""
    ring = []
    for v, slot, color in legs:
        b = builder.add_vertex(VertexKind.BOUNDARY, 0, 3)
        builder.add_edge(v, b, color, slots=(slot, 1))
        ring.append(b)
    builder.link_boundary(ring)
    return ring


def build_linear(n: int) -> Tuple[NGraph, CycleTuple]:
    """The 2-graph G(A_n): a zig-zag path w0..wn whose n edges carry the I-cycles.

    Odd interior vertices have their leg up, even ones down; w0 and wn carry
    two legs each, so the boundary reads s1^(n+3).
    """
    if n < 1:
        raise InputError(f"G(A_n) needs n >= 1, got {n}")
    builder = MapBuilder(2)
    w = [builder.add_vertex(VertexKind.TRIVALENT, 1, 3) for _ in range(n + 1)]
    layouts: List[Dict[str, int]] = []
    for i in range(n + 1):
        if i == 0:
            order = ["next", "left", "down"]
        elif i == n:
            order = ["prev", "right", "up"] if i % 2 else ["prev", "down", "right"]
        else:
            order = ["up", "prev", "next"] if i % 2 else ["prev", "down", "next"]
        layouts.append({name: slot for slot, name in enumerate(order)})
    cycles = []
    for i in range(1, n + 1):
        e = builder.add_edge(w[i - 1], w[i], 1, slots=(layouts[i - 1]["next"], layouts[i]["prev"]))
        cycles.append(CycleSpec(CycleKind.I, (e,), i, "+" if i % 2 else "-"))
    legs: List[Leg] = [(w[n], layouts[n]["right"], 1)]
    legs += [(w[i], layouts[i]["up"], 1) for i in range(n, 0, -1) if "up" in layouts[i]]
    legs.append((w[0], layouts[0]["left"], 1))
    legs += [(w[i], layouts[i]["down"], 1) for i in range(0, n + 1) if "down" in layouts[i]]
    _attach_boundary(builder, legs)
    g, emap = builder.freeze(family=("linear", n))
    return g, CycleTuple.of(cycles).remapped(emap)


def build_tripod(a: int, b: int, c: int) -> Tuple[NGraph, CycleTuple]:
    """The 3-graph G(a,b,c) with its cycles B(a,b,c).

    A hexagonal center sends three red spokes straight to the boundary and a
    blue Y into three sectors; the sector with parameter p is a chain of p
    blue trivalent vertices fanning out to p + 1 boundary legs. Label 1 is the
    central Y-cycle, then the chain edges of sectors a, b, c in order.
    """
    if min(a, b, c) < 1:
        raise InputError(f"G(a,b,c) needs a, b, c >= 1, got ({a}, {b}, {c})")
    builder = MapBuilder(3)
    h = builder.add_vertex(VertexKind.HEXAGONAL, 1, 6)
    legs: List[Leg] = []
    y_edges = []
    cycles = []
    label = 2
    for sector, p in enumerate((a, b, c)):
        legs.append((h, 2 * sector, 2))
        chain = [builder.add_vertex(VertexKind.TRIVALENT, 1, 3) for _ in range(p)]
        y_edges.append(builder.add_edge(h, chain[0], 1, slots=(2 * sector + 1, 0)))
        sector_legs: Dict[int, Leg] = {}
        lo, hi = 1, p + 1
        for j in range(1, p + 1):
            v = chain[j - 1]
            if j == p:
                sector_legs[lo] = (v, 1, 1)
                sector_legs[hi] = (v, 2, 1)
            elif j % 2:
                # [prev, next, leg]
                sector_legs[hi] = (v, 2, 1)
                hi -= 1
            else:
                # [prev, leg, next]
                sector_legs[lo] = (v, 1, 1)
                lo += 1
        for j in range(1, p):
            next_slot = 1 if j % 2 else 2
            e = builder.add_edge(chain[j - 1], chain[j], 1, slots=(next_slot, 0))
            cycles.append(CycleSpec(CycleKind.I, (e,), label, "-" if (j - 1) % 2 == 0 else "+"))
            label += 1
        legs.extend(sector_legs[k] for k in range(1, p + 2))
    cycles.append(CycleSpec(CycleKind.Y_UPPER, tuple(y_edges), 1, "+"))
    _attach_boundary(builder, legs)
    g, emap = builder.freeze(family=("tripod", a, b, c, 0, False))
    return g, CycleTuple.of(cycles).remapped(emap)


def build_theta() -> Tuple[NGraph, CycleTuple]:
    """Two blue trivalent vertices joined by a bigon, each with one leg: a face away from the boundary."""
    builder = MapBuilder(2)
    u = builder.add_vertex(VertexKind.TRIVALENT, 1, 3)
    v = builder.add_vertex(VertexKind.TRIVALENT, 1, 3)
    top = builder.add_edge(u, v, 1, slots=(1, 2))
    builder.add_edge(u, v, 1, slots=(2, 1))
    _attach_boundary(builder, [(v, 0, 1), (u, 0, 1)])
    g, emap = builder.freeze()
    return g, CycleTuple.of([CycleSpec(CycleKind.I, (emap[top],), 1)])


def color_swap(g: NGraph) -> NGraph:
    """Exchange colors 1 and 2 of a 3-graph."""
    if g.N != 3:
        raise InputError(f"Color swap is defined for 3-graphs, got N = {g.N}")
    vertices = tuple(
        Vertex(v.kind, 3 - v.color) if v.kind is VertexKind.TRIVALENT else v for v in g.vertices
    )
    edges = tuple(type(edge)(edge.u, edge.v, 3 - edge.color if edge.color else 0) for edge in g.edges)
    family = g.family
    if family and family[0] == "tripod":
        family = family[:5] + (not family[5],)
    return type(g)(g.N, vertices, edges, g.rotation, g.boundary, g.inner, family)


def standard_graph(family: str, params: Sequence[int]) -> Tuple[NGraph, CycleTuple]:
    """``("linear", [n])`` or ``("tripod", [a, b, c])``."""
    if family == "linear":
        if len(params) != 1:
            raise InputError("The linear family takes one parameter n")
        return build_linear(params[0])
    if family == "tripod":
        if len(params) != 3:
            raise InputError("The tripod family takes three parameters a b c")
        return build_tripod(*params)
    if family == "theta":
        return build_theta()
    raise InputError(f"Unknown N-graph family {family!r}", fix_hint="Use linear, tripod or theta")
