"""Annular N-graphs, their concatenation, and the Coxeter paddings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from ..utils.errors import BoundaryMismatch, InputError, InvalidNGraph
from .braid import BraidWord, tripod_word
from .constructors import build_tripod, color_swap
from .cycles import CycleTuple
from .graph import MapBuilder, NGraph, VertexKind, cyclic_slice, disjoint_union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnnularNGraph(NGraph):
    """N-graph on an annulus: ``boundary`` is the outer circle, ``inner`` the inner one."""

    def __post_init__(self) -> None:
        if not self.inner:
            raise InvalidNGraph("An annular N-graph needs an inner boundary")

    @property
    def outer_word(self) -> BraidWord:
        return self.boundary_word()


AnyGraph = Union[NGraph, AnnularNGraph]


def braid_movie(word: BraidWord, moves: Sequence[int], inner_start: int = 0) -> AnnularNGraph:
    """Annulus swept by braid relations s_i s_j s_i -> s_j s_i s_j.

    Each move names the cyclic position p of the first of three letters to
    rewrite; it becomes one hexagonal vertex. The inner circle lists its
    endpoints starting from position ``inner_start``.
    """
    L = len(word)
    if L == 0:
        raise InputError("An annulus needs a non-empty boundary word")
    if moves and L < 3:
        raise InputError("Braid relations need at least three letters")
    builder = MapBuilder(word.strands)
    outer = [builder.add_vertex(VertexKind.BOUNDARY, 0, 3) for _ in range(L)]
    letters = list(word.letters)
    pending: List[Tuple[int, int]] = [(b, 1) for b in outer]
    for p in moves:
        window = [(p + t) % L for t in range(3)]
        i, j, k = (letters[x] for x in window)
        if i != k or abs(i - j) != 1:
            raise InputError(f"No braid relation at position {p}: letters s{i} s{j} s{k}")
        hexagon = builder.add_vertex(VertexKind.HEXAGONAL, min(i, j), 6)
        # [out_p, out_p+1, out_p+2, in_p+2, in_p+1, in_p]
        for t, x in enumerate(window):
            u, slot = pending[x]
            builder.add_edge(u, hexagon, letters[x], slots=(slot, t))
        for t, x in enumerate(window):
            letters[x] = j if t != 1 else i
            pending[x] = (hexagon, 5 - t)
    inner = [builder.add_vertex(VertexKind.INNER_BOUNDARY, 0, 3) for _ in range(L)]
    for x, (u, slot) in enumerate(pending):
        builder.add_edge(u, inner[x], letters[x], slots=(slot, 0))
    builder.link_boundary(outer)
    builder.link_boundary(cyclic_slice(inner, inner_start), inner=True)
    g, _ = builder.freeze(AnnularNGraph)
    return g


def identity_annulus(word: BraidWord) -> AnnularNGraph:
    """Straight strands from each outer endpoint to the matching inner one."""
    return braid_movie(word, [])


def coxeter_padding(a: int, b: int, c: int, barred: bool = False) -> AnnularNGraph:
    """The Coxeter padding C(a,b,c), or its color swap when ``barred``.

    Around each of the three s2 letters the triple s1 s2 s1 is pushed through
    the following run of s1's, one hexagonal vertex per letter. The outer
    circle reads the boundary of G(a,b,c) and the inner circle, starting at
    position 0, the boundary of the color-swapped tripod.
    """
    if min(a, b, c) < 1:
        raise InputError(f"C(a,b,c) needs a, b, c >= 1, got ({a}, {b}, {c})")
    word = tripod_word(a, b, c)
    L = len(word)
    moves: List[int] = []
    for start, p in ((L - 1, a), (a + 1, b), (a + b + 3, c)):
        moves.extend((start + t) % L for t in range(p))
    padding = braid_movie(word, moves, inner_start=L - 3)
    return color_swap(padding) if barred else padding


def concat(annulus: AnnularNGraph, inner: AnyGraph, offset: int = 0) -> AnyGraph:
    """Glue ``inner`` into the hole of ``annulus``; inner position k meets outer position k + offset."""
    return concat_with_cycles(annulus, inner, None, offset)[0]


def concat_with_cycles(annulus: AnnularNGraph, inner: AnyGraph, cycles: Optional[CycleTuple],
                       offset: int = 0) -> Tuple[AnyGraph, Optional[CycleTuple]]:
    """Concatenation carrying the cycles of ``inner`` along."""
    if annulus.N != inner.N:
        raise BoundaryMismatch(f"Cannot glue a {annulus.N}-graph to a {inner.N}-graph")
    hole = annulus.inner_word()
    rim = inner.boundary_word()
    L = len(hole)
    if len(rim) != L or any(hole.letters[k] != rim.letters[(k + offset) % L] for k in range(L)):
        raise BoundaryMismatch(f"Inner boundary {hole} does not match {rim} at offset {offset}",
                               fix_hint=f"Valid offsets: {hole.cyclic_offsets(rim) or 'none'}")
    builder = MapBuilder(annulus.N)
    avmap, _ = disjoint_union(builder, annulus)
    ivmap, iemap = disjoint_union(builder, inner)
    partner: Dict[int, int] = {}
    for k in range(L):
        x = avmap[annulus.inner[k]]
        y = ivmap[inner.boundary[(k + offset) % L]]
        partner[x], partner[y] = y, x
    builder.strip_arcs(list(partner))
    spliced = _splice(builder, partner)
    builder.boundary = [avmap[v] for v in annulus.boundary]
    builder.inner = [ivmap[v] for v in inner.inner]
    cls = AnnularNGraph if inner.is_annular else NGraph
    g, emap = builder.freeze(cls)
    moved = None
    if cycles is not None:
        # boundary arcs of inner are gone; cycles never run along them
        used = {e for spec in cycles for e in spec.edges}
        moved = cycles.remapped({e: emap[spliced.get(iemap[e], iemap[e])] for e in used})
    return g, moved


def _splice(builder: MapBuilder, partner: Dict[int, int]) -> Dict[int, int]:
    """Fuse the strands through each glued pair of boundary vertices; returns old edge -> fused edge."""
    done: Set[int] = set()
    fused: Dict[int, int] = {}
    for x in list(partner):
        if x in done:
            continue
        ends = []
        crossed: List[int] = []
        for start in (x, partner[x]):
            half, edges, visited = _walk(builder, start, partner)
            if half is None:
                raise InvalidNGraph("Gluing closes a strand into a circle with no interior vertex")
            ends.append(half)
            crossed.extend(edges)
            done.update(visited)
        color = builder.color(ends[0])
        e = builder.add_edge(builder.origin(ends[0]), builder.origin(ends[1]), color)
        builder.replace(ends[0], 2 * e)
        builder.replace(ends[1], 2 * e + 1)
        for old in crossed:
            fused[old] = e
            builder.remove_edge(old)
    for v in partner:
        builder.remove_vertex(v)
    return fused


def _walk(builder: MapBuilder, start: int, partner: Dict[int, int]) -> Tuple[Optional[int], List[int], List[int]]:
    """Follow the strand leaving glued vertex ``start`` until it reaches a vertex that stays."""
    visited = [start]
    edges: List[int] = []
    v = start
    while True:
        (half,) = [h for h in builder.rotation[v] if h is not None and (h >> 1) in builder.ends
                   and builder.origin(h) == v]
        edges.append(half >> 1)
        w = builder.target(half)
        if w not in partner:
            return half ^ 1, edges, visited
        visited.append(w)
        v = partner[w]
        if v == start:
            return None, edges, visited
        visited.append(v)


def tripod_stack(a: int, b: int, c: int, depth: int, barred: bool = False) -> Tuple[AnyGraph, CycleTuple]:
    """C C-bar C ... wrapped around G(a,b,c) or its color swap, ``depth`` paddings deep."""
    if depth < 0:
        raise InputError(f"Stack depth must be non-negative, got {depth}")
    g, cycles = build_tripod(a, b, c)
    if barred != (depth % 2 == 1):
        g, cycles = color_swap(g), cycles.color_swapped()
    for level in reversed(range(depth)):
        padding = coxeter_padding(a, b, c, barred=(level % 2 == 1) != barred)
        g, cycles = concat_with_cycles(padding, g, cycles)
    logger.debug("Built tripod stack (%d,%d,%d) of depth %d", a, b, c, depth)
    return _tagged(g, ("tripod", a, b, c, depth, barred)), cycles


def _tagged(g: AnyGraph, family: Tuple) -> AnyGraph:
    return type(g)(g.N, g.vertices, g.edges, g.rotation, g.boundary, g.inner, family)
