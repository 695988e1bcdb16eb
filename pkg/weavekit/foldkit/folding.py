"""Admissibility, folded matrices and seeds, orbit mutations and folded patterns."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from ..clusterkit.laurent import LaurentPoly
from ..clusterkit.matrix import ExchangeMatrix, Quiver, mutate_array, mutate_matrix
from ..clusterkit.seeds import ClusterKey, ExchangeCache, Seed, YSeedNumeric, mutate_seed
from ..clusterkit.coxeter import mutate_any
from ..utils.errors import CapExceeded, DegenerateValue, FrozenDirection, NonCommuting, NotAdmissible
from .action import Orbit, VertexAction

logger = logging.getLogger(__name__)

Source = Union[ExchangeMatrix, Quiver]


def _matrix(source) -> ExchangeMatrix:
    if isinstance(source, ExchangeMatrix):
        return source
    return source.matrix


def _entry(source, i: int, j: int) -> Optional[int]:
    """b_{i,j}, or None when the n x m layout does not determine it."""
    if isinstance(source, Quiver):
        return source.adjacency[i - 1][j - 1]
    try:
        return _matrix(source).b(i, j)
    except KeyError:
        return None


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: Tuple[int, int, int]
    message: str

    def __str__(self) -> str:
        return f"({self.condition}) {self.message} [i={self.witness[0]}, j={self.witness[1]}, g={self.witness[2]}]"


@dataclass
class AdmissibilityReport:
    """Outcome of checking conditions (a) to (d) for a group action."""

    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def failed_conditions(self) -> Set[str]:
        return {v.condition for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "admissible"
        return "not admissible: " + "; ".join(str(v) for v in self.violations)


def check_admissible(source: Source, action: VertexAction) -> AdmissibilityReport:
    """Evaluate the admissibility conditions and collect a witness for each failure.

    (a) the action preserves mutability; (b) b_ij = b_g(i)g(j);
    (c) b_ii' = 0 for mutable i ~ i'; (d) b_ij b_i'j >= 0 for i ~ i' and mutable j.
    """
    matrix = _matrix(source)
    n, m = matrix.n, matrix.m
    if action.m != m:
        raise NotAdmissible(f"Action on {action.m} points cannot act on a matrix with m={m}")
    report = AdmissibilityReport()
    elements = action.elements()

    for i in range(1, m + 1):
        if (i <= n) != (action(i) <= n):
            report.violations.append(Violation("a", (i, action(i), 1), "orbit mixes mutable and frozen indices"))

    for i in range(1, m + 1):
        for j in range(1, m + 1):
            here, there = _entry(source, i, j), _entry(source, action(i), action(j))
            if here is not None and there is not None and here != there:
                report.violations.append(Violation("b", (i, j, 1), f"b_{i},{j} = {here} but its image is {there}"))

    for g, image in enumerate(elements[1:], start=1):
        for i in range(1, n + 1):
            other = image[i - 1]
            if other == i or other > n:
                continue
            value = _entry(source, i, other)
            if value:
                report.violations.append(Violation("c", (i, other, g), f"b_{i},{other} = {value} inside one orbit"))
        for i in range(1, m + 1):
            other = image[i - 1]
            if other == i:
                continue
            for j in range(1, n + 1):
                left, right = _entry(source, i, j), _entry(source, other, j)
                if left is not None and right is not None and left * right < 0:
                    report.violations.append(
                        Violation("d", (i, j, g), f"b_{i},{j} and b_{other},{j} have opposite signs"))
    return report


def require_admissible(source: Source, action: VertexAction) -> None:
    report = check_admissible(source, action)
    if not report.ok:
        raise NotAdmissible(str(report))


@dataclass(frozen=True)
class FoldedMatrix:
    """b^G_{I,J}: rows over all orbits (mutable first), columns over mutable orbits."""

    entries: Tuple[Tuple[int, ...], ...]
    orbits: Tuple[Orbit, ...]
    n: int

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.n)

    def principal(self) -> ExchangeMatrix:
        """Square mutable part, skew-symmetrizable for admissible input."""
        return ExchangeMatrix.of(row[: self.n] for row in self.entries[: self.n])

    def to_json(self) -> dict:
        return {"orbits": [list(o) for o in self.orbits], "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "FoldedMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in data["entries"])
        n = len(entries[0]) if entries else 0
        return cls(entries, tuple(tuple(o) for o in data["orbits"]), n)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.entries) + "]"


def mutable_orbits(source: Source, action: VertexAction,
                   orbits: Optional[Sequence[Orbit]] = None) -> List[Orbit]:
    n = _matrix(source).n
    return [o for o in (orbits or action.orbits()) if all(i <= n for i in o)]


def fold_matrix(source: Source, action: VertexAction,
                orbits: Optional[Sequence[Orbit]] = None) -> FoldedMatrix:
    """Folded matrix b^G_{I,J} = sum_{i in I} b_{i,j} for a representative j of J.

    ``orbits`` fixes the order of the folded labels; it defaults to orbits
    sorted by their minimal element.
    """
    require_admissible(source, action)
    orbits = tuple(tuple(o) for o in (orbits or action.orbits()))
    n = _matrix(source).n
    mutable = [o for o in orbits if all(i <= n for i in o)]
    frozen = [o for o in orbits if all(i > n for i in o)]
    rows = []
    for I in mutable + frozen:
        row = []
        for J in mutable:
            values = [_entry(source, i, J[0]) for i in I]
            if any(v is None for v in values):
                raise NotAdmissible(f"Entries of orbit {I} against {J} are not determined by the matrix")
            row.append(sum(values))
        rows.append(tuple(row))
    return FoldedMatrix(tuple(rows), tuple(mutable + frozen), len(mutable))


def mutate_folded(matrix: FoldedMatrix, K: int) -> FoldedMatrix:
    """Mutation of a folded matrix at the K-th mutable orbit (1-based)."""
    if not 1 <= K <= matrix.n:
        raise FrozenDirection(f"Folded direction {K} is frozen or out of range 1..{matrix.n}")
    mutated = mutate_array(matrix.array, K - 1)
    return FoldedMatrix(tuple(tuple(int(v) for v in row) for row in mutated.tolist()), matrix.orbits, matrix.n)


@dataclass(frozen=True)
class FoldedSeedNumeric:
    """Folded y-values per mutable orbit with the folded matrix."""

    values: Tuple[Fraction, ...]
    matrix: FoldedMatrix

    def __post_init__(self) -> None:
        if len(self.values) != self.matrix.n:
            raise ValueError(f"Folded Y-seed needs {self.matrix.n} values")


@dataclass(frozen=True)
class FoldedClusterNumeric:
    """Values x_I = psi(x_i) per orbit with the folded matrix."""

    values: Tuple[Fraction, ...]
    matrix: FoldedMatrix

    def __post_init__(self) -> None:
        if len(self.values) != self.matrix.rows:
            raise ValueError(f"Folded cluster needs {self.matrix.rows} values")


def fold_y_seed(yseed: YSeedNumeric, action: VertexAction,
                orbits: Optional[Sequence[Orbit]] = None) -> FoldedSeedNumeric:
    """Collapse a y-seed that is constant on orbits."""
    folded = fold_matrix(yseed.matrix, action, orbits)
    values = []
    for orbit in folded.orbits[: folded.n]:
        seen = {yseed.values[i - 1] for i in orbit}
        if len(seen) != 1:
            raise NotAdmissible(f"Y-values differ along orbit {orbit}")
        values.append(seen.pop())
    return FoldedSeedNumeric(tuple(values), folded)


def mutate_folded_y(yseed: FoldedSeedNumeric, K: int) -> FoldedSeedNumeric:
    """y'_K = 1/y_K and y'_J = y_J y_K^[e]_+ (1 + y_K)^(-e) with e = -b^G_{K,J}."""
    matrix = yseed.matrix
    yk = yseed.values[K - 1]
    if yk == -1:
        raise DegenerateValue(f"1 + y_{K} vanishes on the folded seed")
    values = []
    for J, yj in enumerate(yseed.values, start=1):
        if J == K:
            values.append(1 / yk)
            continue
        e = -matrix.entries[K - 1][J - 1]
        values.append(yj * yk ** max(e, 0) * (1 + yk) ** (-e))
    return FoldedSeedNumeric(tuple(values), mutate_folded(matrix, K))


def mutate_folded_x(cluster: FoldedClusterNumeric, K: int) -> FoldedClusterNumeric:
    """Exchange along column K of B^G: x'_K x_K = prod x_J^[b_JK]_+ + prod x_J^[-b_JK]_+."""
    matrix = cluster.matrix
    positive = Fraction(1)
    negative = Fraction(1)
    for J, value in enumerate(cluster.values, start=1):
        b = matrix.entries[J - 1][K - 1]
        if b > 0:
            positive *= value ** b
        elif b < 0:
            negative *= value ** (-b)
    values = list(cluster.values)
    values[K - 1] = (positive + negative) / cluster.values[K - 1]
    return FoldedClusterNumeric(tuple(values), mutate_folded(matrix, K))


def orbit_mutation(value, orbit: Union[int, Sequence[int]], action: Optional[VertexAction] = None,
                   cache: Optional[ExchangeCache] = None):
    """mu_I = prod_{i in I} mu_i on unfolded values, or the single folded mutation at orbit index I.

    Unfolded inputs are mutated in increasing and in decreasing order and
    the two results compared.
    """
    if isinstance(value, FoldedMatrix):
        return mutate_folded(value, int(orbit))
    if isinstance(value, FoldedSeedNumeric):
        return mutate_folded_y(value, int(orbit))
    if isinstance(value, FoldedClusterNumeric):
        return mutate_folded_x(value, int(orbit))

    members = sorted(orbit)
    if action is not None:
        require_admissible(value if isinstance(value, (Quiver, ExchangeMatrix)) else value.matrix, action)
        if tuple(members) not in [tuple(o) for o in mutable_orbits(_matrix_of(value), action)]:
            raise NotAdmissible(f"{tuple(members)} is not a mutable orbit of the action")
    forward = value
    for k in members:
        forward = mutate_any(forward, k, cache)
    backward = value
    for k in reversed(members):
        backward = mutate_any(backward, k, cache)
    if forward != backward:
        raise NonCommuting(f"Mutations inside orbit {tuple(members)} depend on their order")
    return forward


def _matrix_of(value) -> ExchangeMatrix:
    return value if isinstance(value, ExchangeMatrix) else value.matrix


def check_globally_foldable(source: Source, action: VertexAction, cap: int) -> bool:
    """Every matrix reached by orbit mutations is admissible (exhaustive search)."""
    start = _matrix(source)
    if not check_admissible(start, action).ok:
        return False
    orbits = mutable_orbits(start, action)
    seen = {start.entries}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for orbit in orbits:
            mutated = current
            for k in orbit:
                mutated = mutate_matrix(mutated, k)
            if mutated.entries in seen:
                continue
            if not check_admissible(mutated, action).ok:
                logger.info("Orbit mutation at %s leaves the admissible class", orbit)
                return False
            if len(seen) >= cap:
                raise CapExceeded(f"More than {cap} matrices reached by orbit mutations")
            seen.add(mutated.entries)
            queue.append(mutated)
    logger.info("Globally foldable: %d matrices checked", len(seen))
    return True


@dataclass
class FoldedState:
    seed: Seed
    folded: FoldedClusterNumeric


@dataclass
class FoldedPattern:
    """Folded exchange graph reached from a (G, psi)-admissible seed."""

    action: VertexAction
    orbits: Tuple[Orbit, ...]
    initial: ClusterKey
    vertices: Dict[ClusterKey, FoldedState] = field(default_factory=dict)
    edges: List[Tuple[ClusterKey, ClusterKey, int]] = field(default_factory=list)

    def folded_variable_count(self) -> int:
        """Number of G-orbits of the unfolded mutable cluster variables met."""
        variables: Set[LaurentPoly] = set()
        for state in self.vertices.values():
            variables.update(state.seed.mutable)
        count = 0
        remaining = set(variables)
        while remaining:
            value = remaining.pop()
            for image in self.action.elements()[1:]:
                remaining.discard(value.permuted(image))
            count += 1
        return count


def psi_point(action: VertexAction, orbits: Sequence[Orbit], psi: Sequence) -> List[Fraction]:
    """Values of the initial variables: x_i = psi of its orbit."""
    point = [Fraction(0)] * action.m
    for orbit, value in zip(orbits, psi):
        for i in orbit:
            point[i - 1] = Fraction(value)
    return point


def enumerate_folded_pattern(
    seed: Seed,
    action: VertexAction,
    psi: Sequence,
    cap: int,
    orbits: Optional[Sequence[Orbit]] = None,
) -> FoldedPattern:
    """Breadth-first search over orbit mutations of an admissible seed.

    At every edge the folded matrix of the mutated seed must equal the
    folded mutation of the folded matrix, and the unfolded cluster
    variables evaluated at the psi-point must equal the folded values.
    """
    orbits = tuple(tuple(o) for o in (orbits or action.orbits()))
    if len(psi) != len(orbits):
        raise NotAdmissible(f"psi needs one value per orbit ({len(orbits)}), got {len(psi)}")
    point = psi_point(action, orbits, psi)
    cache = ExchangeCache()
    seed = cache.intern_seed(seed)
    folded_matrix = fold_matrix(seed.matrix, action, orbits)
    mutable = list(folded_matrix.orbits[: folded_matrix.n])
    folded_orbits = folded_matrix.orbits
    start = FoldedClusterNumeric(tuple(Fraction(v) for v in _orbit_values(point, folded_orbits)), folded_matrix)

    pattern = FoldedPattern(action=action, orbits=folded_orbits, initial=seed.key)
    pattern.vertices[seed.key] = FoldedState(seed, start)
    seen_edges: Set[frozenset] = set()
    queue = deque([seed.key])
    while queue:
        key = queue.popleft()
        state = pattern.vertices[key]
        for K, orbit in enumerate(mutable, start=1):
            mutated = state.seed
            for k in orbit:
                mutated = mutate_seed(mutated, k, cache)
            folded = mutate_folded_x(state.folded, K)
            expected = fold_matrix(mutated.matrix, action, folded_orbits)
            if expected != folded.matrix:
                raise NonCommuting(f"Folding does not commute with mutation at orbit {orbit}")
            for J, members in enumerate(folded_orbits, start=1):
                for i in members:
                    if mutated.variables[i - 1].evaluate(point) != folded.values[J - 1]:
                        raise NonCommuting(f"Folded value of orbit {members} disagrees after mutation at {orbit}")
            target = mutated.key
            if target not in pattern.vertices:
                if len(pattern.vertices) >= cap:
                    raise CapExceeded(f"Folded pattern has more than {cap} seeds")
                pattern.vertices[target] = FoldedState(mutated, folded)
                queue.append(target)
            pair = frozenset((key, target))
            if pair not in seen_edges:
                seen_edges.add(pair)
                pattern.edges.append((key, target, K))
    logger.info("Folded pattern complete: %d seeds", len(pattern.vertices))
    return pattern


def _orbit_values(point: Sequence[Fraction], orbits: Sequence[Orbit]) -> List[Fraction]:
    return [point[orbit[0] - 1] for orbit in orbits]
