"""Canonical forms, boundary rotations, partial rotations and G-admissibility of N-graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, List, Mapping, Optional, Tuple

import networkx as nx

from ..foldkit.action import VertexAction
from ..utils.errors import BoundaryNotRotationInvariant, NotRaySymmetric, UnsupportedConfiguration
from .cycles import CycleTuple
from .graph import NGraph, VertexKind, cyclic_slice

CanonicalForm = Tuple


def canonical_form(g: NGraph, cycles: Optional[CycleTuple] = None) -> CanonicalForm:
    """Serialization that two maps share exactly when they are isomorphic.

    Vertices are numbered breadth-first from the dart leaving boundary
    position 0 along its arc; each vertex records its neighbours in
    counterclockwise order starting from the dart it was reached by.
    """
    labels: Dict[int, int] = {}
    entry: Dict[int, int] = {}
    queue: deque = deque()

    def discover(v: int, through: int) -> None:
        labels[v] = len(labels)
        entry[v] = through
        queue.append(v)

    discover(g.boundary[0], g.rotation[g.boundary[0]][0])
    rows = []
    seeds = [g.inner[0]] if g.inner else []
    while queue or seeds:
        if not queue:
            v = seeds.pop()
            if v in labels:
                continue
            discover(v, g.rotation[v][0])
        v = queue.popleft()
        around = cyclic_slice(g.rotation[v], g.rotation[v].index(entry[v]))
        row = []
        for h in around:
            w = g.target(h)
            if w not in labels:
                discover(w, h ^ 1)
            offset = (g.slot(h ^ 1) - g.slot(entry[w])) % len(g.rotation[w])
            row.append((g.color(h), labels[w], offset))
        vertex = g.vertices[v]
        rows.append((vertex.kind.value, vertex.color, tuple(row)))
    if len(labels) != len(g.vertices):
        raise UnsupportedConfiguration("Canonical forms need every vertex connected to a boundary circle")
    form: Tuple = (g.N, tuple(rows), tuple(labels[b] for b in g.boundary), tuple(labels[b] for b in g.inner))
    if cycles is None:
        return form

    def edge_key(e: int) -> Tuple[int, int]:
        keys = []
        for h in (2 * e, 2 * e + 1):
            v = g.origin(h)
            keys.append((labels[v], (g.slot(h) - g.slot(entry[v])) % len(g.rotation[v])))
        return min(keys)

    cyc = tuple((c.label, c.kind.value, tuple(sorted(edge_key(e) for e in c.edges))) for c in cycles)
    return form + (cyc,)


def rotate(g: NGraph, steps: int) -> NGraph:
    """Relabel boundary positions: position k of the result is position k - steps of g."""
    L = len(g.boundary)
    if not g.boundary_word().is_rotation_invariant(steps):
        raise BoundaryNotRotationInvariant(f"Boundary {g.boundary_word()} changes under rotation by {steps}")
    boundary = tuple(g.boundary[(k - steps) % L] for k in range(L))
    inner = g.inner
    if inner:
        M = len(inner)
        if (steps * M) % L:
            raise BoundaryNotRotationInvariant("Inner and outer circles cannot rotate by the same angle")
        inner_steps = steps * M // L
        if not g.inner_word().is_rotation_invariant(inner_steps):
            raise BoundaryNotRotationInvariant(f"Inner boundary {g.inner_word()} changes under the rotation")
        inner = tuple(inner[(k - inner_steps) % M] for k in range(M))
    return replace(g, boundary=boundary, inner=inner, family=None)


def is_rotation_symmetric(g: NGraph, order: int, cycles: Optional[CycleTuple] = None,
                          relabel: Optional[Mapping[int, int]] = None) -> bool:
    """Whether rotation by 2*pi/order maps g (and its cycles, relabelled) to itself."""
    L = len(g.boundary)
    if order < 1 or L % order:
        return False
    try:
        turned = rotate(g, L // order)
    except BoundaryNotRotationInvariant:
        return False
    moved = cycles.relabeled(relabel or {}) if cycles is not None else None
    return canonical_form(turned, moved) == canonical_form(g, cycles)


# partial rotation -------------------------------------------------------------

@dataclass(frozen=True)
class RaySectors:
    """The center and the three spokes that cut a 3-graph into sectors a, b, c."""

    center: int
    spoke_slot: int
    spokes: Tuple[int, int, int]
    blocks: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


def ray_sectors(g: NGraph) -> RaySectors:
    """Locate the rays from the center through boundary position 0 and the two other spokes."""
    if g.N != 3 or g.is_annular:
        raise NotRaySymmetric("Partial rotation applies to 3-graphs on the disk")
    b0 = g.boundary[0]
    spoke = g.strand_at(b0)
    h = g.target(spoke)
    if g.vertices[h].kind is not VertexKind.HEXAGONAL:
        raise NotRaySymmetric("The ray through boundary position 0 does not reach a hexagonal center")
    s = g.slot(spoke ^ 1)
    around = cyclic_slice(g.rotation[h], s)
    ends = [g.target(around[2 * t]) for t in range(3)]
    if any(g.vertices[v].kind is not VertexKind.BOUNDARY for v in ends):
        raise NotRaySymmetric("A ray from the center meets a vertex before the boundary")
    position = {v: k for k, v in enumerate(g.boundary)}
    q = [position[v] for v in ends]
    if not q[0] < q[1] < q[2]:
        raise NotRaySymmetric("Spokes do not reach the boundary in counterclockwise order")
    L = len(g.boundary)
    blocks = (tuple(range(1, q[1])), tuple(range(q[1] + 1, q[2])), tuple(range(q[2] + 1, L)))
    sector_of_position = {k: i for i, block in enumerate(blocks) for k in block}
    inside = nx.MultiGraph()
    for v, vertex in enumerate(g.vertices):
        if v != h and not vertex.on_boundary:
            inside.add_node(v)
    for edge in g.edges:
        if edge.u in inside and edge.v in inside:
            inside.add_edge(edge.u, edge.v)
    for component in nx.connected_components(inside):
        sectors = set()
        for v in component:
            for half in g.rotation[v]:
                w = g.target(half)
                if w == h:
                    t = (g.slot(half ^ 1) - s) % 6
                    if t % 2 == 0:
                        raise NotRaySymmetric("An edge leaves the center along a ray")
                    sectors.add(t // 2)
                elif g.vertices[w].on_boundary:
                    if position[w] not in sector_of_position:
                        raise NotRaySymmetric("A ray meets an edge of the graph")
                    sectors.add(sector_of_position[position[w]])
        if len(sectors) > 1:
            raise NotRaySymmetric(f"Sectors {sorted(sectors)} are joined across a ray")
    return RaySectors(h, s, (q[0], q[1], q[2]), blocks)


def is_ray_symmetric(g: NGraph) -> bool:
    """Rays avoid the graph and the two sectors exchanged by partial rotation read the same word."""
    try:
        sectors = ray_sectors(g)
    except NotRaySymmetric:
        return False
    word = g.boundary_word().letters
    return [word[k] for k in sectors.blocks[1]] == [word[k] for k in sectors.blocks[2]]


def partial_rotation(g: NGraph, cycles: Optional[CycleTuple] = None) -> Tuple[NGraph, Optional[CycleTuple]]:
    """Exchange the sectors between the second and third rays and between the third and the first."""
    sectors = ray_sectors(g)
    word = g.boundary_word().letters
    _, block_b, block_c = sectors.blocks
    if [word[k] for k in block_b] != [word[k] for k in block_c]:
        raise NotRaySymmetric("The two rotated sectors end on different boundary words")
    builder = g.edit()
    h, s = sectors.center, sectors.spoke_slot
    around = builder.rotation[h]
    i, j = (s + 3) % 6, (s + 5) % 6
    around[i], around[j] = around[j], around[i]
    old = list(g.boundary)
    q0, q1, q2 = sectors.spokes
    ring = old[: q1 + 1] + [old[k] for k in block_c] + [old[q2]] + [old[k] for k in block_b]
    builder.strip_arcs(old)
    builder.link_boundary(ring)
    rotated, emap = builder.freeze()
    return rotated, cycles.remapped(emap) if cycles is not None else None


# G-admissibility ----------------------------------------------------------------

class AdmissibleSetting(Enum):
    """Symmetries under which standard N-graphs fold onto non-simply-laced types."""

    A_ROTATION = "A2n-1"  # rotation by pi of G(A_2n-1)
    D4_ROTATION = "D4"  # rotation by 2*pi/3 of G(2,2,2)
    D_PARTIAL = "Dn+1"  # partial rotation of G(n-1,2,2)
    E6_PARTIAL = "E6"  # partial rotation of G(2,3,3)


def setting_relabeling(setting: AdmissibleSetting, m: int) -> Dict[int, int]:
    """The cycle relabelling tau for a tuple of m cycles."""
    if setting is AdmissibleSetting.A_ROTATION:
        return {i: m + 1 - i for i in range(1, m + 1)}
    if setting is AdmissibleSetting.D4_ROTATION:
        return {2: 3, 3: 4, 4: 2}
    if setting is AdmissibleSetting.D_PARTIAL:
        return {m - 1: m, m: m - 1}
    return {3: 5, 5: 3, 4: 6, 6: 4}


def setting_action(setting: AdmissibleSetting, m: int) -> VertexAction:
    """The vertex action on the quiver that matches the symmetry of the setting."""
    tau = setting_relabeling(setting, m)
    images = tuple(tau.get(i, i) for i in range(1, m + 1))
    order = 3 if setting is AdmissibleSetting.D4_ROTATION else 2
    return VertexAction(images, order)


def is_G_admissible(g: NGraph, cycles: CycleTuple, setting: AdmissibleSetting) -> bool:
    """tau(G) = G with the cycles of B sent to tau(B) by the prescribed relabelling."""
    tau = setting_relabeling(setting, len(cycles))
    try:
        if setting is AdmissibleSetting.A_ROTATION:
            return is_rotation_symmetric(g, 2, cycles, tau)
        if setting is AdmissibleSetting.D4_ROTATION:
            return len(cycles) == 4 and is_rotation_symmetric(g, 3, cycles, tau)
        if setting is AdmissibleSetting.E6_PARTIAL and len(cycles) != 6:
            return False
        turned, moved = partial_rotation(g, cycles)
        return canonical_form(turned, moved.relabeled(tau)) == canonical_form(g, cycles)
    except (NotRaySymmetric, BoundaryNotRotationInvariant, UnsupportedConfiguration):
        return False
