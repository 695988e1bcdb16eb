"""Microlocal monodromy of cycles and the seed it defines.

An I-cycle (or a long I-cycle) is read in the 2-dimensional quotient
F^{i+1}/F^{i-1} shared by the faces around its first edge, i being the edge
color. The four lines are the faces left of the edge, beyond its first
endpoint, right of the edge and beyond its last endpoint; the monodromy is
minus their cross ratio. At the far end of a long I-cycle the face beyond
is brought into the quotient by meeting its plane with the common plane
(first edge of color 1) or joining its line with the common line (color 2).

A Y-cycle is read from the three faces beyond its trivalent ends, taken
clockwise around the center: upper triple ratio for a color-1 Y, lower for
color 2.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, List, Optional

import sympy

from ..clusterkit.seeds import YSeedNumeric, mutate_y
from ..ngraphkit.cycles import CycleKind, CycleSpec, CycleTuple, cycle_ends, quiver_of, y_center
from ..ngraphkit.graph import NGraph
from ..ngraphkit.mutation import legendrian_mutate
from ..utils.errors import UnsupportedConfiguration, ZeroPairing, ZeroWedge
from .flags import BoundaryFlags, Flag, FlagAssignment, solve_face_flags
from .linalg import Vector, column, meet, pairing, parallel, plane_wedge, quotient_wedge, to_fraction

logger = logging.getLogger(__name__)

SENSES = ("upper", "lower")


def _as_vector(v) -> Vector:
    return v if isinstance(v, sympy.MatrixBase) else column(v)


def cross_ratio(v1, v2, v3, v4, wedge: Optional[Callable] = None) -> Fraction:
    """(v1^v2)(v3^v4) / ((v2^v3)(v4^v1)) for four lines of a plane.

    ``wedge`` replaces the 2x2 determinant when the lines live in a quotient.
    """
    wedge = wedge or plane_wedge
    v1, v2, v3, v4 = (_as_vector(v) for v in (v1, v2, v3, v4))
    pairs = [wedge(v1, v2), wedge(v2, v3), wedge(v3, v4), wedge(v4, v1)]
    if any(p == 0 for p in pairs):
        raise ZeroWedge("Two cyclically consecutive lines of the cross ratio coincide")
    return to_fraction(pairs[0] * pairs[2] / (pairs[1] * pairs[3]))


def triple_ratio(a, b, c, A, B, C, sense: str = "upper") -> Fraction:
    """B(a)C(b)A(c) / (B(c)C(a)A(b)) (upper) or C(a)B(c)A(b) / (C(b)B(a)A(c)) (lower).

    a, b, c are line representatives and A, B, C plane covectors.
    """
    if sense not in SENSES:
        raise ValueError(f"sense must be one of {SENSES}, got {sense!r}")
    a, b, c, A, B, C = (_as_vector(v) for v in (a, b, c, A, B, C))
    if sense == "upper":
        top = [(B, a), (C, b), (A, c)]
        bottom = [(B, c), (C, a), (A, b)]
    else:
        top = [(C, a), (B, c), (A, b)]
        bottom = [(C, b), (B, a), (A, c)]
    numerator = sympy.Integer(1)
    denominator = sympy.Integer(1)
    for X, v in top:
        numerator *= pairing(X, v)
    for X, v in bottom:
        denominator *= pairing(X, v)
    if numerator == 0 or denominator == 0:
        raise ZeroPairing("A line lies on a plane it is paired with in the triple ratio")
    return to_fraction(numerator / denominator)


# cycles -------------------------------------------------------------------------

def _representative(flag: Flag, i: int, common: Flag) -> Vector:
    """Vector of flag's F^i seen in the quotient F^{i+1}/F^{i-1} of common."""
    if flag.N == 2:
        return flag.line
    if i == 1:
        plane = common.covector
        if pairing(plane, flag.line) == 0:
            return flag.line
        return meet(plane, flag.covector)
    if not parallel(flag.line, common.line):
        return flag.line
    return flag.subspace(2)[1]


def _chain_monodromy(g: NGraph, fa: FlagAssignment, spec: CycleSpec, face_of) -> Fraction:
    (_, h), (_, last) = cycle_ends(g, spec)
    i = g.color(h)
    if len(spec.edges) > 1 and g.N != 3:
        raise UnsupportedConfiguration(f"Long I-cycle {spec.label} on an {g.N}-graph")
    left = fa[face_of[h]]
    right = fa[face_of[h ^ 1]]
    beyond_start = fa[face_of[g.turn(h, 1)]]
    beyond_end = fa[face_of[g.turn(last, 1)]]
    wedge = quotient_wedge(left.subspace(i - 1), left.subspace(i + 1), g.N)
    lines = [_representative(f, i, left) for f in (left, beyond_start, right, beyond_end)]
    return -cross_ratio(*lines, wedge=wedge)


def _y_monodromy(g: NGraph, fa: FlagAssignment, spec: CycleSpec, face_of) -> Fraction:
    if g.N != 3:
        raise UnsupportedConfiguration(f"Y-cycle {spec.label} on an {g.N}-graph")
    center = y_center(g, spec)
    ends = cycle_ends(g, spec)
    # clockwise around the center
    ends.sort(key=lambda end: -g.slot(end[1] ^ 1))
    beyond: List[Flag] = [fa[face_of[g.turn(half, 1)]] for _, half in ends]
    sense = "upper" if spec.kind is CycleKind.Y_UPPER else "lower"
    logger.debug("Y-cycle %d at vertex %d read with the %s ratio", spec.label, center, sense)
    (a, A), (b, B), (c, C) = ((f.line, f.covector) for f in beyond)
    return triple_ratio(a, b, c, A, B, C, sense)


def monodromy(g: NGraph, fa: FlagAssignment, cycle: CycleSpec) -> Fraction:
    """Monodromy of one cycle under the face flags fa."""
    face_of = g.face_of()
    if cycle.kind.is_y:
        return _y_monodromy(g, fa, cycle, face_of)
    return _chain_monodromy(g, fa, cycle, face_of)


def extract_seed(g: NGraph, cycles: CycleTuple, fa: FlagAssignment) -> YSeedNumeric:
    """Monodromies of all cycles together with their intersection quiver."""
    values = [monodromy(g, fa, spec) for spec in cycles]
    return YSeedNumeric.of(values, quiver_of(g, cycles).matrix)


def seed_from_boundary(g: NGraph, cycles: CycleTuple, bf: BoundaryFlags) -> YSeedNumeric:
    return extract_seed(g, cycles, solve_face_flags(g, bf))


def check_equivariance(g: NGraph, cycles: CycleTuple, bf: BoundaryFlags, k: int) -> bool:
    """Does mutating the graph at cycle k X-mutate its seed, boundary flags fixed?"""
    before = seed_from_boundary(g, cycles, bf)
    mutated, moved = legendrian_mutate(g, cycles, k)
    after = seed_from_boundary(mutated, moved, bf)
    expected = mutate_y(before, k)
    if after != expected:
        logger.info("Cycle %d: mutated graph gives %s, X-mutation gives %s", k, after, expected)
        return False
    return True


def random_gl(rng, dim: int) -> sympy.Matrix:
    """Random invertible integer matrix."""
    while True:
        matrix = sympy.Matrix(rng.integers(-5, 6, size=(dim, dim)).tolist())
        if matrix.det() != 0:
            return matrix
