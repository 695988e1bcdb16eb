"""Flags on the faces of an N-graph and on the arcs of its boundary.

A flag is stored as an invertible N x N rational matrix whose first i
columns span F^i. For N = 3 the plane F^2 is also available as a covector,
so line/plane incidences are single pairings.

Face flags are solved from boundary flags by grouping the slots (face, j)
that an edge of color i forces to agree (j != i), reading the known slots off
the boundary arcs and, for N = 3, filling the remaining slots by meeting two
known planes or joining two known lines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

import networkx as nx
import numpy as np
import sympy

from ..ngraphkit.braid import BraidWord
from ..ngraphkit.graph import Face, NGraph
from ..utils.errors import (
    BoundaryMismatch,
    ConstraintViolated,
    DegenerateDraw,
    InconsistentClosure,
    InputError,
    InteriorFace,
    UnsupportedConfiguration,
)
from .linalg import (
    Vector,
    column,
    extend_to_basis,
    meet,
    pairing,
    parallel,
    plane_basis,
    random_covector_through,
    random_vector,
    random_vector_in,
    same_span,
)

logger = logging.getLogger(__name__)

MAX_DRAWS = 16
SUPPORTED_N = (2, 3)

Slot = Tuple[int, int]
Seed = Union[int, np.random.Generator, None]


@dataclass(frozen=True)
class Flag:
    """Complete flag F^0 < F^1 < ... < F^N of rational N-space."""

    basis: sympy.ImmutableMatrix

    def __post_init__(self) -> None:
        if self.basis.rows != self.basis.cols:
            raise InputError(f"Flag basis must be square, got {self.basis.rows}x{self.basis.cols}")
        if self.basis.det() == 0:
            raise InputError("Flag basis vectors are linearly dependent")

    @classmethod
    def of(cls, columns: Sequence[Sequence]) -> "Flag":
        """Flag from its basis columns, first column spanning F^1."""
        return cls(sympy.ImmutableMatrix(sympy.Matrix.hstack(*(column(c) for c in columns))))

    @classmethod
    def from_line(cls, line: Vector) -> "Flag":
        """2-dimensional flag with F^1 = line."""
        return cls(sympy.ImmutableMatrix(sympy.Matrix.hstack(*extend_to_basis([line], 2))))

    @classmethod
    def from_line_plane(cls, line: Vector, covector: Vector) -> "Flag":
        """3-dimensional flag with F^1 = line and F^2 the kernel of covector."""
        if pairing(covector, line) != 0:
            raise ConstraintViolated("The line does not lie on the plane")
        second = next(v for v in plane_basis(covector) if not parallel(v, line))
        return cls(sympy.ImmutableMatrix(sympy.Matrix.hstack(line, second, covector)))

    @property
    def N(self) -> int:
        return self.basis.rows

    def subspace(self, i: int) -> List[Vector]:
        """Basis of F^i."""
        return [sympy.Matrix(self.basis.col(c)) for c in range(i)]

    @property
    def line(self) -> Vector:
        return sympy.Matrix(self.basis.col(0))

    @property
    def covector(self) -> Vector:
        if self.N != 3:
            raise UnsupportedConfiguration(f"Plane covectors are only used for N = 3, got N = {self.N}")
        return sympy.Matrix(self.basis.col(0)).cross(sympy.Matrix(self.basis.col(1)))

    def same_step(self, other: "Flag", i: int) -> bool:
        """F^i(self) == F^i(other)."""
        return same_span(self.subspace(i), other.subspace(i))

    def transformed(self, matrix: sympy.Matrix) -> "Flag":
        return Flag(sympy.ImmutableMatrix(matrix * self.basis))

    def to_json(self) -> dict:
        return {"N": self.N, "basis": [[str(x) for x in self.basis.row(r)] for r in range(self.N)]}

    @classmethod
    def from_json(cls, data: dict) -> "Flag":
        rows = data["basis"]
        if len(rows) != int(data["N"]):
            raise InputError(f"Flag JSON has {len(rows)} rows for N = {data['N']}")
        return cls(sympy.ImmutableMatrix([[sympy.Rational(x) for x in row] for row in rows]))

    def __str__(self) -> str:
        cols = ["(" + ", ".join(str(x) for x in self.basis.col(c)) + ")" for c in range(self.N)]
        return "[" + " < ".join(cols) + "]"


def _check_step(first: Flag, second: Flag, i: int, where: str, edge: Optional[int] = None) -> None:
    """Flags across a color-i wall agree in every F^j except F^i, where they differ."""
    for j in range(1, first.N):
        agree = first.same_step(second, j)
        if j == i and agree:
            raise ConstraintViolated(f"{where}: F^{j} does not change across a color-{i} wall", edge=edge)
        if j != i and not agree:
            raise ConstraintViolated(f"{where}: F^{j} changes across a color-{i} wall", edge=edge)


@dataclass(frozen=True)
class BoundaryFlags:
    """One flag per boundary arc; arc k lies between letters k and k + 1 of the word."""

    word: BraidWord
    flags: Tuple[Flag, ...]

    def __post_init__(self) -> None:
        L = len(self.word)
        if len(self.flags) != L:
            raise InputError(f"{L} boundary letters need {L} arc flags, got {len(self.flags)}")
        for flag in self.flags:
            if flag.N != self.word.strands:
                raise InputError(f"Arc flag of dimension {flag.N} on a {self.word.strands}-strand boundary")
        for k in range(L):
            _check_step(self.flags[k - 1], self.flags[k], self.word.letters[k], f"Boundary letter {k}")

    def __len__(self) -> int:
        return len(self.flags)

    def transformed(self, matrix: sympy.Matrix) -> "BoundaryFlags":
        return BoundaryFlags(self.word, tuple(f.transformed(matrix) for f in self.flags))

    def to_json(self) -> dict:
        return {"word": self.word.to_json(), "flags": [f.to_json() for f in self.flags]}

    @classmethod
    def from_json(cls, data: dict) -> "BoundaryFlags":
        return cls(BraidWord.from_json(data["word"]), tuple(Flag.from_json(f) for f in data["flags"]))


@dataclass(frozen=True)
class FlagAssignment:
    """Flags on the inside faces of an N-graph, keyed by face index."""

    graph: NGraph
    flags: Mapping[int, Flag]

    def __getitem__(self, face: int) -> Flag:
        return self.flags[face]

    def transformed(self, matrix: sympy.Matrix) -> "FlagAssignment":
        return FlagAssignment(self.graph, {f: flag.transformed(matrix) for f, flag in self.flags.items()})

    def to_json(self) -> dict:
        return {"faces": {str(f): flag.to_json() for f, flag in sorted(self.flags.items())}}


def verify_assignment(g: NGraph, flags: Mapping[int, Flag]) -> None:
    """Re-check every interior edge; raises ConstraintViolated naming the first bad edge."""
    face_of = g.face_of()
    for e, edge in enumerate(g.edges):
        if edge.color == 0:
            continue
        left, right = face_of[2 * e], face_of[2 * e + 1]
        if left not in flags or right not in flags:
            continue
        _check_step(flags[left], flags[right], edge.color, f"Edge {e}", edge=e)


# slot classes -----------------------------------------------------------------

class _SlotClasses:
    """Connected components of the slots (face, j) forced equal by the edges."""

    def __init__(self, g: NGraph) -> None:
        if g.N not in SUPPORTED_N:
            raise UnsupportedConfiguration(f"Flags are implemented for N in {SUPPORTED_N}, got N = {g.N}")
        if g.is_annular:
            raise UnsupportedConfiguration("Flags are solved on disks; glue the annulus first")
        self.g = g
        self.faces: List[Face] = [f for f in g.faces() if not f.outside]
        self.face_of = g.face_of()
        steps = range(1, g.N)
        graph = nx.Graph()
        graph.add_nodes_from((f.index, j) for f in self.faces for j in steps)
        for e, edge in enumerate(g.edges):
            if edge.color == 0:
                continue
            left, right = self.face_of[2 * e], self.face_of[2 * e + 1]
            graph.add_edges_from(((left, j), (right, j)) for j in steps if j != edge.color)
        self.members: List[Set[Slot]] = [set(c) for c in nx.connected_components(graph)]
        self.class_of: Dict[Slot, int] = {slot: c for c, group in enumerate(self.members) for slot in group}

    def step(self, c: int) -> int:
        return next(iter(self.members[c]))[1]

    def incident(self, c: int) -> List[int]:
        """For N = 3: classes of the other step on the faces of class c."""
        other = 3 - self.step(c)
        return sorted({self.class_of[(f, other)] for f, _ in self.members[c]})

    def arc_faces(self) -> List[Tuple[int, int]]:
        """(arc, face) pairs in arc order."""
        return sorted((k, f.index) for f in self.faces for k in f.arcs)


def _slot_value(flag: Flag, j: int) -> Vector:
    """Line of F^1, or for N = 3 the covector of F^2."""
    return flag.line if j == 1 else flag.covector


def _fill(classes: _SlotClasses, values: Dict[int, Vector]) -> bool:
    """Fill N = 3 slots meeting two distinct known planes or joining two distinct known lines."""
    changed = False
    progress = True
    while progress:
        progress = False
        for c in range(len(classes.members)):
            if c in values:
                continue
            known = [values[d] for d in classes.incident(c) if d in values]
            distinct: List[Vector] = []
            for v in known:
                if not any(parallel(v, w) for w in distinct):
                    distinct.append(v)
            if len(distinct) >= 2:
                values[c] = meet(distinct[0], distinct[1])
                progress = changed = True
    return changed


def _assemble(classes: _SlotClasses, values: Dict[int, Vector]) -> Dict[int, Flag]:
    g = classes.g
    flags: Dict[int, Flag] = {}
    for face in classes.faces:
        missing = [j for j in range(1, g.N) if classes.class_of[(face.index, j)] not in values]
        if missing:
            raise InteriorFace(f"Face {face.index} has F^{missing[0]} undetermined by the boundary flags")
        line = values[classes.class_of[(face.index, 1)]]
        if g.N == 2:
            flags[face.index] = Flag.from_line(line)
        else:
            covector = values[classes.class_of[(face.index, 2)]]
            if pairing(covector, line) != 0:
                raise ConstraintViolated(f"Face {face.index}: its line does not lie on its plane")
            flags[face.index] = Flag.from_line_plane(line, covector)
    return flags


def solve_face_flags(g: NGraph, bf: BoundaryFlags) -> FlagAssignment:
    """Flags on every inside face of g determined by the boundary flags.

    Faces read their flag off their boundary arcs; for N = 3, faces away
    from the boundary are filled when two distinct neighbouring planes (or
    lines) pin the missing subspace down. All edge conditions are re-checked.
    """
    if bf.word != g.boundary_word():
        raise BoundaryMismatch(f"Boundary flags are for {bf.word}, the graph has boundary {g.boundary_word()}")
    classes = _SlotClasses(g)
    values: Dict[int, Vector] = {}
    for k, face in classes.arc_faces():
        for j in range(1, g.N):
            c = classes.class_of[(face, j)]
            value = _slot_value(bf.flags[k], j)
            if c in values and not parallel(values[c], value):
                raise ConstraintViolated(f"Arc {k}: F^{j} disagrees with another arc forced equal to it")
            values.setdefault(c, value)
    if g.N == 3 and _fill(classes, values):
        logger.debug("Filled face flags away from the boundary")
    flags = _assemble(classes, values)
    verify_assignment(g, flags)
    return FlagAssignment(g, flags)


# generic draws ------------------------------------------------------------------

def _rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _draw(classes: _SlotClasses, rng: np.random.Generator) -> Dict[int, Vector]:
    """Slot values for one generic draw, taking arc classes in order of first incidence."""
    values: Dict[int, Vector] = {}
    order: List[int] = []
    for _, face in classes.arc_faces():
        for j in range(1, classes.g.N):
            c = classes.class_of[(face, j)]
            if c not in order:
                order.append(c)
    for c in order:
        if classes.g.N == 3:
            _fill(classes, values)
        if c in values:
            continue
        if classes.g.N == 2:
            values[c] = random_vector(rng, 2)
            continue
        anchor = next((values[d] for d in classes.incident(c) if d in values), None)
        if anchor is None:
            values[c] = random_vector(rng, 3)
        elif classes.step(c) == 1:
            values[c] = random_vector_in(rng, anchor)
        else:
            values[c] = random_covector_through(rng, anchor)
    return values


def _overdetermined(classes: _SlotClasses, values: Dict[int, Vector]) -> bool:
    """Some face line misses its plane."""
    for face in classes.faces:
        line = values.get(classes.class_of[(face.index, 1)])
        plane = values.get(classes.class_of[(face.index, 2)])
        if line is not None and plane is not None and pairing(plane, line) != 0:
            return True
    return False


def generic_boundary_flags(beta: BraidWord, seed: Seed = 0, graph: Optional[NGraph] = None) -> BoundaryFlags:
    """Random boundary flags for beta, consistent with the faces of graph.

    Without a graph only N = 2 is possible: every arc gets its own random
    line. With a graph, slots forced equal by the faces share one value and
    the draw is retried until every edge condition holds.
    """
    if beta.strands not in SUPPORTED_N:
        raise UnsupportedConfiguration(f"Boundary flags are implemented for N in {SUPPORTED_N}, got {beta.strands}")
    rng = _rng(seed)
    if graph is None:
        if beta.strands != 2:
            raise InconsistentClosure(f"Boundary flags for {beta} need the target 3-graph to close up",
                                      fix_hint="Pass the N-graph whose boundary is beta")
        return _draw_lines(beta, rng)
    if graph.boundary_word() != beta:
        raise BoundaryMismatch(f"Graph boundary {graph.boundary_word()} differs from {beta}")
    classes = _SlotClasses(graph)
    overdetermined = 0
    for attempt in range(MAX_DRAWS):
        values = _draw(classes, rng)
        if graph.N == 3 and _overdetermined(classes, values):
            overdetermined += 1
            continue
        flags = []
        try:
            for k, face in classes.arc_faces():
                line = values[classes.class_of[(face, 1)]]
                if graph.N == 2:
                    flags.append(Flag.from_line(line))
                else:
                    flags.append(Flag.from_line_plane(line, values[classes.class_of[(face, 2)]]))
            bf = BoundaryFlags(beta, tuple(flags))
            solve_face_flags(graph, bf)
        except (ConstraintViolated, InputError) as exc:
            logger.debug("Draw %d rejected: %s", attempt, exc)
            continue
        return bf
    if overdetermined == MAX_DRAWS:
        raise InconsistentClosure(f"No draw satisfied the face incidences of {beta}")
    raise DegenerateDraw(f"No generic boundary flags for {beta} after {MAX_DRAWS} draws")


def _draw_lines(beta: BraidWord, rng: np.random.Generator) -> BoundaryFlags:
    for attempt in range(MAX_DRAWS):
        lines = [random_vector(rng, 2) for _ in range(len(beta))]
        if all(not parallel(lines[k - 1], lines[k]) for k in range(len(lines))):
            return BoundaryFlags(beta, tuple(Flag.from_line(v) for v in lines))
        logger.debug("Draw %d rejected: two consecutive lines coincide", attempt)
    raise DegenerateDraw(f"No generic boundary lines for {beta} after {MAX_DRAWS} draws")


def flags_from_lines(beta: BraidWord, lines: Iterable[Sequence]) -> BoundaryFlags:
    """Boundary flags of a 2-strand braid from explicit arc lines."""
    return BoundaryFlags(beta, tuple(Flag.from_line(column(v)) for v in lines))
