"""Moves I and II on 3-graphs, their inverses, and the push-through II*.

Move I cancels two hexagonal vertices that share three consecutive edges
(``"I"``) or creates such a pair on three parallel strands (``"I-"``).
Move II pushes a trivalent vertex through the hexagonal vertex at the end
of its stem (``"II"``): the hexagon splits in two and a trivalent vertex of
the other color comes out on the far side. ``"II-"`` undoes it and
``"II*"`` keeps pushing while the new stem runs into another hexagon.

Sites:

* ``"I"``: the middle edge shared by the two hexagons.
* ``"I-"``: three half-edges ``(h1, h2, h3)`` of parallel strands read
  left to right, colors ``c, c', c``.
* ``"II"`` and ``"II*"``: the stem edge joining the trivalent vertex to
  the hexagon.
* ``"II-"``: the stem half-edge leaving the trivalent vertex to be pushed back.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..utils.errors import InvalidNGraph, SiteMismatch, UnsupportedConfiguration
from .cycles import CycleKind, CycleSpec, CycleTuple, chain_vertices, check_cycle, cycle_ends, cycle_vertices
from .graph import MapBuilder, NGraph, VertexKind, cyclic_slice

logger = logging.getLogger(__name__)

Site = Union[int, Tuple[int, int, int]]
Moved = Tuple[NGraph, Optional[CycleTuple]]


class Move(Enum):
    I = "I"
    I_BACKWARD = "I-"
    II = "II"
    II_BACKWARD = "II-"
    II_STAR = "II*"


def apply_move(g: NGraph, move: Union[Move, str], site: Site, cycles: Optional[CycleTuple] = None) -> Moved:
    """Rewrite g at ``site``; cycles through the site are carried along when given."""
    move = Move(move)
    if g.N != 3:
        raise SiteMismatch(f"Moves I and II act on 3-graphs, got N = {g.N}")
    if move is Move.I:
        return _cancel_hexagons(g, _int_site(site), cycles)
    if move is Move.I_BACKWARD:
        return _create_hexagons(g, _triple_site(site), cycles)
    if move is Move.II:
        graph, moved, _ = _push_through(g, _int_site(site), cycles)
        return graph, moved
    if move is Move.II_BACKWARD:
        return _pull_back(g, _int_site(site), cycles)
    return _push_all_the_way(g, _int_site(site), cycles)


def move_sites(g: NGraph, move: Union[Move, str]) -> List[Site]:
    """Every site where ``move`` applies, in a deterministic order."""
    move = Move(move)
    if move is Move.I:
        return [e for e in range(len(g.edges)) if _hexagon_pair(g, e) is not None]
    if move is Move.I_BACKWARD:
        return _parallel_triples(g)
    if move in (Move.II, Move.II_STAR):
        return [e for e in range(len(g.edges)) if _stem(g, e) is not None]
    return [h for h in range(2 * len(g.edges)) if _pushed_pattern(g, h) is not None]


def _int_site(site: Site) -> int:
    if isinstance(site, int):
        return site
    raise SiteMismatch(f"Expected an edge or half-edge id, got {site!r}")


def _triple_site(site: Site) -> Tuple[int, int, int]:
    if isinstance(site, int) or len(site) != 3:
        raise SiteMismatch(f"Move I- takes three half-edges, got {site!r}")
    h1, h2, h3 = site
    return h1, h2, h3


def _hex_color(c: int, d: int) -> int:
    return min(c, d)


# cycle transport ------------------------------------------------------------

def _transport(g: NGraph, cycles: Optional[CycleTuple], graph: NGraph, emap: Dict[int, int],
               rewrite: Callable[[CycleSpec], CycleSpec]) -> Optional[CycleTuple]:
    """Rewrite every cycle, renumber its edges and check the result on the new graph."""
    if cycles is None:
        return None
    moved = CycleTuple.of(rewrite(spec) for spec in cycles).remapped(emap)
    for spec in moved:
        try:
            check_cycle(graph, spec)
        except InvalidNGraph as exc:
            raise UnsupportedConfiguration(f"Cycle {spec.label} cannot be carried through the move: {exc}") from exc
    return moved


def _resized(spec: CycleSpec, edges: Sequence[int]) -> CycleSpec:
    kind = spec.kind if spec.kind.is_y else (CycleKind.I if len(edges) == 1 else CycleKind.LONG_I)
    return replace(spec, kind=kind, edges=tuple(edges))


def _dedupe(edges: Sequence[int]) -> List[int]:
    out: List[int] = []
    for e in edges:
        if not out or out[-1] != e:
            out.append(e)
    return out


# Move I ----------------------------------------------------------------------

def _hexagon_pair(g: NGraph, e: int) -> Optional[Tuple[List[int], List[int]]]:
    """Rotations at both ends of e, read from e, when they share the two flanking edges too."""
    p, q = g.edges[e].u, g.edges[e].v
    if p == q or any(g.vertices[v].kind is not VertexKind.HEXAGONAL for v in (p, q)):
        return None
    around_p = cyclic_slice(g.rotation[p], g.slot(2 * e))
    around_q = cyclic_slice(g.rotation[q], g.slot(2 * e + 1))
    if around_p[1] ^ 1 != around_q[5] or around_p[5] ^ 1 != around_q[1]:
        return None
    return around_p, around_q


def _fuse(builder: MapBuilder, out: int, into: int, color: int) -> int:
    """Join the far ends of half-edges ``out`` and ``into`` (both leaving removed vertices) by one edge."""
    x, y = builder.target(out), builder.target(into)
    e = builder.add_edge(x, y, color)
    builder.replace(out ^ 1, 2 * e)
    builder.replace(into ^ 1, 2 * e + 1)
    builder.remove_edge(out >> 1)
    builder.remove_edge(into >> 1)
    return e


def _cancel_hexagons(g: NGraph, e: int, cycles: Optional[CycleTuple]) -> Moved:
    pair = _hexagon_pair(g, e)
    if pair is None:
        raise SiteMismatch(f"Edge {e} is not the middle of three edges shared by two hexagonal vertices")
    around_p, around_q = pair
    p, q = g.edges[e].u, g.edges[e].v
    strands = [(around_p[2], around_q[4]), (around_p[3], around_q[3]), (around_p[4], around_q[2])]
    for out, into in strands:
        if g.target(out) in (p, q) or g.target(into) in (p, q):
            raise UnsupportedConfiguration(f"The hexagonal vertices at edge {e} share a fourth edge")
    internal = {e, around_p[1] >> 1, around_p[5] >> 1}
    builder = g.edit()
    fused: Dict[int, int] = {}
    for out, into in strands:
        new = _fuse(builder, out, into, g.color(out))
        fused[out >> 1] = fused[into >> 1] = new
    for x in internal:
        builder.remove_edge(x)
    builder.remove_vertex(p)
    builder.remove_vertex(q)
    graph, emap = builder.freeze(type(g))

    def rewrite(spec: CycleSpec) -> CycleSpec:
        if spec.kind.is_y and set(cycle_vertices(g, spec)) & {p, q}:
            raise UnsupportedConfiguration(f"Y-cycle {spec.label} uses a vertex removed by Move I")
        edges = _dedupe([fused.get(x, x) for x in spec.edges if x not in internal])
        return _resized(spec, edges)

    logger.debug("Move I cancelled hexagonal vertices %d and %d", p, q)
    return graph, _transport(g, cycles, graph, emap, rewrite)


def _parallel_triples(g: NGraph) -> List[Tuple[int, int, int]]:
    face = g.face_of()
    by_face: Dict[int, List[int]] = {}
    for h in range(2 * len(g.edges)):
        if g.color(h):
            by_face.setdefault(face[h], []).append(h)
    found = []
    for h1 in range(2 * len(g.edges)):
        c = g.color(h1)
        if not c:
            continue
        for h2 in by_face.get(face[h1 ^ 1], []):
            if abs(g.color(h2) - c) != 1:
                continue
            for h3 in by_face.get(face[h2 ^ 1], []):
                if g.color(h3) == c and len({h1 >> 1, h2 >> 1, h3 >> 1}) == 3:
                    found.append((h1, h2, h3))
    return found


def _create_hexagons(g: NGraph, site: Tuple[int, int, int], cycles: Optional[CycleTuple]) -> Moved:
    h1, h2, h3 = site
    if not all(0 <= h < 2 * len(g.edges) for h in site):
        raise SiteMismatch(f"Half-edges {site} are not all in the graph")
    face = g.face_of()
    colors = [g.color(h) for h in site]
    if (not colors[0] or colors[2] != colors[0] or abs(colors[1] - colors[0]) != 1
            or face[h1 ^ 1] != face[h2] or face[h2 ^ 1] != face[h3] or len({h >> 1 for h in site}) != 3):
        raise SiteMismatch(f"Half-edges {site} are not three parallel strands colored c, c', c")
    c, d = colors[0], colors[1]
    builder = g.edit()
    p = builder.add_vertex(VertexKind.HEXAGONAL, _hex_color(c, d), 6)
    q = builder.add_vertex(VertexKind.HEXAGONAL, _hex_color(c, d), 6)
    xs, ys = [], []
    for h in site:
        x = builder.add_edge(g.origin(h), p, g.color(h))
        y = builder.add_edge(q, g.target(h), g.color(h))
        builder.replace(h, 2 * x)
        builder.replace(h ^ 1, 2 * y + 1)
        builder.remove_edge(h >> 1)
        xs.append(x)
        ys.append(y)
    middle = builder.add_edge(p, q, c)
    left = builder.add_edge(p, q, d)
    right = builder.add_edge(p, q, d)
    builder.set_rotation(p, [2 * middle, 2 * left, 2 * xs[0] + 1, 2 * xs[1] + 1, 2 * xs[2] + 1, 2 * right])
    builder.set_rotation(q, [2 * middle + 1, 2 * right + 1, 2 * ys[2], 2 * ys[1], 2 * ys[0], 2 * left + 1])
    graph, emap = builder.freeze(type(g))
    # each strand crosses both hexagons straight through
    paths = {h1 >> 1: (xs[0], right, ys[0]), h2 >> 1: (xs[1], middle, ys[1]), h3 >> 1: (xs[2], left, ys[2])}
    starts = {h >> 1: g.origin(h) for h in site}

    def rewrite(spec: CycleSpec) -> CycleSpec:
        if not set(spec.edges) & set(paths):
            return spec
        if spec.kind.is_y:
            raise UnsupportedConfiguration(f"Move I- would cut a leg of Y-cycle {spec.label}")
        path = chain_vertices(g, spec)
        edges: List[int] = []
        for i, x in enumerate(spec.edges):
            if x not in paths:
                edges.append(x)
            elif path[i] == starts[x]:
                edges.extend(paths[x])
            else:
                edges.extend(reversed(paths[x]))
        return _resized(spec, edges)

    logger.debug("Move I- created two hexagonal vertices on strands %s", site)
    return graph, _transport(g, cycles, graph, emap, rewrite)


# Move II ---------------------------------------------------------------------

def _stem(g: NGraph, e: int) -> Optional[Tuple[int, List[int], List[int]]]:
    """(stem half-edge leaving the trivalent vertex, its rotation, the hexagon's rotation) for a Move II site."""
    for h in (2 * e, 2 * e + 1):
        t, hexagon = g.origin(h), g.target(h)
        if g.vertices[t].kind is not VertexKind.TRIVALENT or g.vertices[hexagon].kind is not VertexKind.HEXAGONAL:
            continue
        around_t = cyclic_slice(g.rotation[t], g.slot(h))
        around_h = cyclic_slice(g.rotation[hexagon], g.slot(h ^ 1))
        if {around_t[1] >> 1, around_t[2] >> 1} & {x >> 1 for x in around_h}:
            continue
        return h, around_t, around_h
    return None


def _push_through(g: NGraph, e: int, cycles: Optional[CycleTuple]) -> Tuple[NGraph, Optional[CycleTuple], int]:
    """Move II at stem edge e; also returns the stem edge of the trivalent vertex it creates."""
    found = _stem(g, e)
    if found is None:
        raise SiteMismatch(f"Edge {e} does not join a trivalent vertex to a hexagonal vertex")
    stem, (_, upper, lower), (_, r_lower, b_lower, r_far, b_upper, r_upper) = found
    t, hexagon = g.origin(stem), g.target(stem)
    c, d = g.color(stem), g.color(r_far)
    builder = g.edit()
    a = builder.add_vertex(VertexKind.HEXAGONAL, _hex_color(c, d), 6)
    b = builder.add_vertex(VertexKind.HEXAGONAL, _hex_color(c, d), 6)
    r = builder.add_vertex(VertexKind.TRIVALENT, d, 3)
    between = builder.add_edge(a, b, c)
    arc = builder.add_edge(a, b, d)
    to_a = builder.add_edge(a, r, d)
    to_b = builder.add_edge(b, r, d)
    builder.set_rotation(a, [b_upper, r_upper, upper, 2 * arc, 2 * between, 2 * to_a])
    builder.set_rotation(b, [b_lower, 2 * to_b, 2 * between + 1, 2 * arc + 1, lower, r_lower])
    builder.set_rotation(r, [r_far, 2 * to_a + 1, 2 * to_b + 1])
    builder.remove_edge(e)
    builder.remove_vertex(t)
    builder.remove_vertex(hexagon)
    graph, emap = builder.freeze(type(g))
    extension = {upper: to_a, lower: to_b}

    def rewrite(spec: CycleSpec) -> CycleSpec:
        touched = set(cycle_vertices(g, spec))
        if spec.kind.is_y:
            if touched & {t, hexagon}:
                raise UnsupportedConfiguration(f"Move II moves a vertex of Y-cycle {spec.label}")
            return spec
        edges = list(spec.edges)
        ends = cycle_ends(g, spec)
        if e in edges:
            # a chain crossing the hexagon from the far strand into the stem now stops at r
            if edges[0] == e and len(edges) > 1 and edges[1] == r_far >> 1:
                return _resized(spec, edges[1:])
            if edges[-1] == e and len(edges) > 1 and edges[-2] == r_far >> 1:
                return _resized(spec, edges[:-1])
            raise UnsupportedConfiguration(f"Cycle {spec.label} uses the stem without crossing the hexagon")
        if hexagon in touched:
            raise UnsupportedConfiguration(f"Cycle {spec.label} crosses the hexagonal vertex split by Move II")
        for position, (v, half) in enumerate(ends):
            if v != t:
                continue
            if position == 0:
                edges.insert(0, extension[half])
            else:
                edges.append(extension[half])
        return _resized(spec, edges)

    logger.debug("Move II pushed trivalent vertex %d through hexagonal vertex %d", t, hexagon)
    return graph, _transport(g, cycles, graph, emap, rewrite), emap[r_far >> 1]


def _pushed_pattern(g: NGraph, h: int) -> Optional[Tuple[List[int], List[int]]]:
    """Rotations at the two hexagons fed by the trivalent vertex whose stem is h, read from that vertex."""
    r = g.origin(h)
    if g.vertices[r].kind is not VertexKind.TRIVALENT or g.color(h) == 0:
        return None
    _, to_a, to_b = cyclic_slice(g.rotation[r], g.slot(h))
    a, b = g.target(to_a), g.target(to_b)
    if a == b or any(g.vertices[v].kind is not VertexKind.HEXAGONAL for v in (a, b)):
        return None
    around_a = cyclic_slice(g.rotation[a], g.slot(to_a ^ 1))
    around_b = cyclic_slice(g.rotation[b], g.slot(to_b ^ 1))
    if around_a[5] ^ 1 != around_b[1] or around_a[4] ^ 1 != around_b[2]:
        return None
    if g.target(h) in (a, b):
        return None
    return around_a, around_b


def _pull_back(g: NGraph, stem: int, cycles: Optional[CycleTuple]) -> Moved:
    pattern = _pushed_pattern(g, stem) if 0 <= stem < 2 * len(g.edges) else None
    if pattern is None:
        raise SiteMismatch(f"Half-edge {stem} is not the stem of a trivalent vertex pushed through by Move II")
    (to_a, b_upper, r_upper, upper, arc, between), (to_b, _, _, lower, r_lower, b_lower) = pattern
    r = g.origin(stem)
    a, b = g.origin(to_a), g.origin(to_b)
    c, d = g.color(upper), g.color(stem)
    builder = g.edit()
    t = builder.add_vertex(VertexKind.TRIVALENT, c, 3)
    hexagon = builder.add_vertex(VertexKind.HEXAGONAL, _hex_color(c, d), 6)
    new_stem = builder.add_edge(t, hexagon, c)
    builder.set_rotation(t, [2 * new_stem, upper, lower])
    builder.set_rotation(hexagon, [2 * new_stem + 1, r_lower, b_lower, stem, b_upper, r_upper])
    removed_edges = {between >> 1, arc >> 1, to_a >> 1, to_b >> 1}
    for x in removed_edges:
        builder.remove_edge(x)
    for v in (a, b, r):
        builder.remove_vertex(v)
    graph, emap = builder.freeze(type(g))
    shortcut = {to_a >> 1: upper >> 1, to_b >> 1: lower >> 1}

    def rewrite(spec: CycleSpec) -> CycleSpec:
        touched = set(cycle_vertices(g, spec))
        if spec.kind.is_y:
            if touched & {a, b, r}:
                raise UnsupportedConfiguration(f"Move II- moves a vertex of Y-cycle {spec.label}")
            return spec
        edges = list(spec.edges)
        if edges[-1] in shortcut and len(edges) > 1 and edges[-2] == shortcut[edges[-1]]:
            edges.pop()
        if edges[0] in shortcut and len(edges) > 1 and edges[1] == shortcut[edges[0]]:
            edges.pop(0)
        if set(edges) & removed_edges:
            raise UnsupportedConfiguration(f"Cycle {spec.label} runs inside the region rewritten by Move II-")
        trimmed = replace(spec, edges=tuple(edges))
        ends = cycle_ends(g, trimmed)
        if {a, b} & set(chain_vertices(g, trimmed)[1:-1]):
            raise UnsupportedConfiguration(f"Cycle {spec.label} crosses a hexagonal vertex merged by Move II-")
        for position, (v, half) in enumerate(ends):
            if v == r and half == stem:
                if position == 0:
                    edges.insert(0, new_stem)
                else:
                    edges.append(new_stem)
            elif v == r:
                raise UnsupportedConfiguration(f"Cycle {spec.label} ends at the pushed vertex off its stem")
        return _resized(spec, edges)

    logger.debug("Move II- pulled trivalent vertex %d back through hexagonal vertices %d and %d", r, a, b)
    return graph, _transport(g, cycles, graph, emap, rewrite)


def _push_all_the_way(g: NGraph, e: int, cycles: Optional[CycleTuple]) -> Moved:
    """Move II repeated along the stem of each new trivalent vertex until it leaves the hexagons."""
    steps = 0
    while True:
        g, cycles, e = _push_through(g, e, cycles)
        steps += 1
        if _stem(g, e) is None or steps > len(g.vertices):
            break
    logger.debug("Move II* took %d push-through steps", steps)
    return g, cycles
