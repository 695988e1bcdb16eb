"""Legendrian mutation of N-graphs along I- and Y-cycles."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Dict, List, Tuple

from ..clusterkit.coxeter import coxeter_split
from ..utils.errors import UnsupportedConfiguration
from .annulus import AnyGraph, tripod_stack
from .cycles import CycleKind, CycleSpec, CycleTuple, cycle_ends, cycle_vertices, quiver_of, y_center
from .graph import VertexKind, cyclic_slice
from .symmetry import canonical_form

logger = logging.getLogger(__name__)


def legendrian_mutate(g: AnyGraph, cycles: CycleTuple, k: int) -> Tuple[AnyGraph, CycleTuple]:
    """Mutate along cycle k; the intersection quiver of the result is the quiver mutated at k.

    Bipartition tags are dropped since they no longer describe the quiver.
    """
    spec = cycles.by_label(k)
    if spec.kind is CycleKind.I:
        result = _flip(g, cycles, spec)
    elif spec.kind.is_y:
        result = _y_mutation(g, cycles, spec)
    else:
        raise UnsupportedConfiguration(f"Cycle {k} is a long I-cycle; only I- and Y-cycles can be mutated",
                                       fix_hint="Normalize the cycle to an I-cycle with moves first")
    graph, moved = result
    # Raises when the transported cycles meet outside the implemented local patterns.
    quiver_of(graph, moved)
    return graph, moved.unsigned()


def _flip(g: AnyGraph, cycles: CycleTuple, spec: CycleSpec) -> Tuple[AnyGraph, CycleTuple]:
    """Turn the edge of an I-cycle by a quarter turn.

    With rotations [e, a, b] at u and [e', c, d] at v the result is
    [e, d, a] at u and [e', b, c] at v.
    """
    (e,) = spec.edges
    h, t = 2 * e, 2 * e + 1
    u, v = g.origin(h), g.origin(t)
    for w in (u, v):
        if g.vertices[w].kind is not VertexKind.TRIVALENT:
            raise UnsupportedConfiguration(f"I-cycle {spec.label} ends at a non-trivalent vertex {w}")
    _, a, b = cyclic_slice(g.rotation[u], g.slot(h))
    _, c, d = cyclic_slice(g.rotation[v], g.slot(t))
    if {a >> 1, b >> 1} & {c >> 1, d >> 1}:
        raise UnsupportedConfiguration(f"I-cycle {spec.label} has endpoints joined by a second edge")
    for other in cycles:
        if other.label != spec.label and e in other.edges:
            raise UnsupportedConfiguration(f"Cycles {other.label} and {spec.label} share the edge {e}")
    builder = g.edit()
    builder.set_rotation(u, [h, d, a])
    builder.set_rotation(v, [t, b, c])
    flipped, emap = builder.freeze(type(g))
    return flipped, cycles.remapped(emap)


def _y_mutation(g: AnyGraph, cycles: CycleTuple, spec: CycleSpec) -> Tuple[AnyGraph, CycleTuple]:
    """Replace a Y-cycle by a ring of three hexagonal and three trivalent vertices.

    The center keeps its place; the old legs and their trivalent ends are
    removed, the new Y runs in the other color to the ring's trivalent
    vertices, and each old strand lands on the hexagonal vertex on its side.
    Cycles that ended at an old trivalent end now continue straight through
    that hexagonal vertex into the ring.
    """
    h = y_center(g, spec)
    legs = {2 * e if g.edges[e].u == h else 2 * e + 1 for e in spec.edges}
    start = next(s for s in range(6) if g.rotation[h][(s + 1) % 6] in legs)
    s_A, t_a, s_B, t_b, s_C, t_c = cyclic_slice(g.rotation[h], start)
    y_color = g.color(t_a)
    ring_color = g.color(s_A)
    ends = []
    for t in (t_a, t_b, t_c):
        T = g.target(t)
        _, first, second = cyclic_slice(g.rotation[T], g.slot(t ^ 1))
        ends.append((T, first, second))
    removed = {T for T, _, _ in ends}
    for T, first, second in ends:
        for strand in (first, second):
            if g.target(strand) in removed or g.target(strand) == h:
                raise UnsupportedConfiguration(f"Y-cycle {spec.label} has a strand joining two of its legs")
    for other in cycles:
        if other.label == spec.label:
            continue
        if h in cycle_vertices(g, other) or set(other.edges) & set(spec.edges):
            raise UnsupportedConfiguration(f"Cycle {other.label} passes through the center of Y-cycle {spec.label}")
        if other.kind.is_y and any(v in removed for v, _ in cycle_ends(g, other)):
            raise UnsupportedConfiguration(f"Y-cycles {other.label} and {spec.label} share a trivalent end")

    builder = g.edit()
    low = min(y_color, ring_color)
    H = [builder.add_vertex(VertexKind.HEXAGONAL, low) for _ in range(3)]
    r = [builder.add_vertex(VertexKind.TRIVALENT, ring_color) for _ in range(3)]
    x = [builder.add_edge(h, H[i], y_color) for i in range(3)]
    y = [builder.add_edge(h, r[i], ring_color) for i in range(3)]
    # ring H0 - r0 - H1 - r1 - H2 - r2 - H0
    forward = [builder.add_edge(H[i], r[i], ring_color) for i in range(3)]
    backward = [builder.add_edge(H[(i + 1) % 3], r[i], ring_color) for i in range(3)]
    builder.set_rotation(h, [2 * x[0], 2 * y[0], 2 * x[1], 2 * y[1], 2 * x[2], 2 * y[2]])
    spokes = (s_A, s_B, s_C)
    # continuation[strand] = ring edge reached by crossing the hexagon to the opposite side
    continuation: Dict[int, int] = {}
    for i in range(3):
        _, first, _ = ends[i]
        _, _, previous_second = ends[(i - 1) % 3]
        builder.set_rotation(H[i], [spokes[i], first, 2 * forward[i], 2 * x[i] + 1,
                                    2 * backward[(i - 1) % 3], previous_second])
        builder.set_rotation(r[i], [2 * backward[i] + 1, 2 * y[i] + 1, 2 * forward[i] + 1])
        continuation[first] = backward[(i - 1) % 3]
        continuation[previous_second] = forward[i]
    for t in (t_a, t_b, t_c):
        builder.remove_edge(t >> 1)
    for T in removed:
        builder.remove_vertex(T)

    moved: List[CycleSpec] = []
    for other in cycles:
        if other.label == spec.label:
            moved.append(replace(other, kind=CycleKind.for_y_color(ring_color), edges=tuple(y)))
            continue
        edges = list(other.edges)
        for position, (v, half) in enumerate(cycle_ends(g, other)):
            if v not in removed:
                continue
            extension = continuation[half]
            if position == 0:
                edges.insert(0, extension)
            else:
                edges.append(extension)
        kind = other.kind if len(edges) == len(other.edges) else CycleKind.LONG_I
        moved.append(replace(other, kind=kind, edges=tuple(edges)))
    mutated, emap = builder.freeze(type(g))
    return mutated, CycleTuple.of(moved).remapped(emap)


def legendrian_coxeter_mutation(g: AnyGraph, cycles: CycleTuple) -> Tuple[AnyGraph, CycleTuple]:
    """Mutate every source cycle, then every sink cycle.

    A standard tripod stack gains one more Coxeter padding around the
    color-swapped core; any other graph goes through the mutations one by one.
    """
    family = g.family
    if family and family[0] == "tripod":
        _, a, b, c, depth, barred = family
        if _is_standard_stack(g, cycles, (a, b, c, depth, barred)):
            logger.debug("Adding a Coxeter padding to the tripod stack (%d,%d,%d) of depth %d", a, b, c, depth)
            return tripod_stack(a, b, c, depth + 1, barred)
    signs = cycles.signs()
    plus, minus = coxeter_split(quiver_of(g, cycles))
    for k in plus + minus:
        g, cycles = legendrian_mutate(g, cycles, k)
    return g, cycles.with_signs(signs)


def legendrian_coxeter_power(g: AnyGraph, cycles: CycleTuple, r: int) -> Tuple[AnyGraph, CycleTuple]:
    for _ in range(r):
        g, cycles = legendrian_coxeter_mutation(g, cycles)
    return g, cycles


def _is_standard_stack(g: AnyGraph, cycles: CycleTuple, params: Tuple) -> bool:
    try:
        stack, stack_cycles = tripod_stack(*params)
        return canonical_form(stack, stack_cycles) == canonical_form(g, cycles)
    except UnsupportedConfiguration:
        return False
