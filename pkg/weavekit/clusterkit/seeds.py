"""Seeds, their mutations, and numeric Y-seeds."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..rootdata import RootVector
from ..utils.errors import DegenerateValue
from .laurent import FINGERPRINT_PRIME, LaurentPoly, monomial_product
from .matrix import ExchangeMatrix, check_direction, mutate_matrix

logger = logging.getLogger(__name__)

Y_VALUE_RANGE = (2, 97)


@dataclass(frozen=True)
class ClusterKey:
    """Unordered cluster of mutable variables, as sorted canonical strings."""

    variables: Tuple[str, ...]

    @classmethod
    def of(cls, variables: Sequence[LaurentPoly]) -> "ClusterKey":
        return cls(tuple(sorted(v.serialize() for v in variables)))

    def __str__(self) -> str:
        return "{" + " | ".join(self.variables) + "}"


@dataclass(frozen=True)
class Seed:
    """Cluster variables (Laurent polynomials in the initial variables) and an exchange matrix."""

    variables: Tuple[LaurentPoly, ...]
    matrix: ExchangeMatrix

    def __post_init__(self) -> None:
        if len(self.variables) != self.matrix.m:
            raise ValueError(f"Seed has {len(self.variables)} variables for an exchange matrix with m={self.matrix.m}")

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def mutable(self) -> Tuple[LaurentPoly, ...]:
        return self.variables[: self.n]

    @cached_property
    def key(self) -> ClusterKey:
        return ClusterKey.of(self.mutable)

    def same_as(self, other: "Seed") -> bool:
        """Labeled equality: same variables in the same slots and the same matrix."""
        return self.variables == other.variables and self.matrix == other.matrix

    def to_json(self) -> dict:
        return {"vars": [v.to_json() for v in self.variables], "matrix": self.matrix.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "Seed":
        matrix = ExchangeMatrix.from_json(data["matrix"])
        variables = tuple(LaurentPoly.from_json(matrix.m, item) for item in data["vars"])
        return cls(variables, matrix)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.variables) + f"; B={self.matrix})"


def initial_seed(matrix: ExchangeMatrix) -> Seed:
    """Seed whose variables are the initial generators x_1..x_m."""
    m = matrix.m
    return Seed(tuple(LaurentPoly.variable(m, i) for i in range(1, m + 1)), matrix)


def exchange_polynomial(seed: Seed, k: int) -> LaurentPoly:
    """prod_{b_kj>0} x_j^{b_kj} + prod_{b_kj<0} x_j^{-b_kj}."""
    row = seed.matrix.row(k)
    m = seed.m
    positive = monomial_product(((seed.variables[j], b) for j, b in enumerate(row) if b > 0), m)
    negative = monomial_product(((seed.variables[j], -b) for j, b in enumerate(row) if b < 0), m)
    return positive + negative


class ExchangeCache:
    """Registry of cluster variables met during one exploration.

    Variables are interned, so exchange relations already seen are answered
    from a memo keyed by object identity. New relations are resolved either
    by checking a known variable whose fingerprint matches (one product and
    one comparison) or by exact Laurent division.
    """

    def __init__(self) -> None:
        self._by_fingerprint: Dict[int, List[LaurentPoly]] = {}
        self._memo: Dict[Tuple[int, Tuple[Tuple[int, int], ...]], LaurentPoly] = {}
        self.divisions = 0
        self.hits = 0

    def __len__(self) -> int:
        return sum(len(bucket) for bucket in self._by_fingerprint.values())

    def variables(self) -> List[LaurentPoly]:
        return [v for bucket in self._by_fingerprint.values() for v in bucket]

    def intern(self, value: LaurentPoly) -> LaurentPoly:
        bucket = self._by_fingerprint.setdefault(value.fingerprint(), [])
        for known in bucket:
            if known is value or known == value:
                return known
        bucket.append(value)
        return value

    def intern_seed(self, seed: Seed) -> Seed:
        interned = tuple(self.intern(v) for v in seed.variables)
        if all(a is b for a, b in zip(interned, seed.variables)):
            return seed
        return Seed(interned, seed.matrix)

    def exchange(self, seed: Seed, k: int) -> LaurentPoly:
        """x'_k for a seed whose variables are already interned."""
        outgoing = seed.variables[k - 1]
        row = seed.matrix.row(k)
        memo_key = (id(outgoing), tuple(sorted((id(seed.variables[j]), b) for j, b in enumerate(row) if b)))
        cached = self._memo.get(memo_key)
        if cached is not None:
            self.hits += 1
            return cached

        numerator = exchange_polynomial(seed, k)
        result = None
        p = FINGERPRINT_PRIME
        if outgoing.fingerprint():
            target = numerator.fingerprint() * pow(outgoing.fingerprint(), -1, p) % p
            for candidate in self._by_fingerprint.get(target, ()):
                if candidate * outgoing == numerator:
                    result = candidate
                    break
        if result is None:
            self.divisions += 1
            result = self.intern(numerator.exact_div(outgoing))
        self._memo[memo_key] = result
        return result


def mutate_seed(seed: Seed, k: int, cache: Optional[ExchangeCache] = None) -> Seed:
    """Seed mutation at direction k; only slot k and the matrix change."""
    check_direction(seed.matrix, k)
    if cache is None:
        fresh = exchange_polynomial(seed, k).exact_div(seed.variables[k - 1])
    else:
        seed = cache.intern_seed(seed)
        fresh = cache.exchange(seed, k)
    variables = seed.variables[: k - 1] + (fresh,) + seed.variables[k:]
    return Seed(variables, mutate_matrix(seed.matrix, k))


def mutate_sequence(seed: Seed, directions: Sequence[int], cache: Optional[ExchangeCache] = None) -> Seed:
    for k in directions:
        seed = mutate_seed(seed, k, cache)
    return seed


def denominator_vector(value: LaurentPoly, n: Optional[int] = None) -> RootVector:
    """d_i = -(minimal exponent of x_i), read over the first n variables."""
    shift = value.min_exponents()
    n = len(shift) if n is None else n
    return RootVector(tuple(-s for s in shift[:n]))


@dataclass(frozen=True)
class YSeedNumeric:
    """Exact rational y-values for the mutable directions together with the exchange matrix."""

    values: Tuple[Fraction, ...]
    matrix: ExchangeMatrix

    def __post_init__(self) -> None:
        if len(self.values) != self.matrix.n:
            raise ValueError(f"Y-seed needs {self.matrix.n} values, got {len(self.values)}")
        if any(v == 0 for v in self.values):
            raise DegenerateValue("Y-values must be nonzero")

    @classmethod
    def of(cls, values: Sequence, matrix: ExchangeMatrix) -> "YSeedNumeric":
        return cls(tuple(Fraction(v) for v in values), matrix)

    @property
    def n(self) -> int:
        return self.matrix.n

    def to_json(self) -> dict:
        return {"y": [str(v) for v in self.values], "matrix": self.matrix.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "YSeedNumeric":
        return cls.of([Fraction(v) for v in data["y"]], ExchangeMatrix.from_json(data["matrix"]))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def mutate_y(yseed: YSeedNumeric, k: int) -> YSeedNumeric:
    """X-mutation: y'_k = 1/y_k and y'_i = y_i y_k^[b_ik]_+ (1 + y_k)^(-b_ik)."""
    matrix = yseed.matrix
    check_direction(matrix, k)
    yk = yseed.values[k - 1]
    if yk == -1:
        raise DegenerateValue(f"1 + y_{k} vanishes; draw new generic values")
    values = []
    for i, yi in enumerate(yseed.values, start=1):
        if i == k:
            values.append(1 / yk)
            continue
        b = matrix.entries[i - 1][k - 1]
        values.append(yi * yk ** max(b, 0) * (1 + yk) ** (-b))
    return YSeedNumeric(tuple(values), mutate_matrix(matrix, k))


def random_y_seed(matrix: ExchangeMatrix, rng: np.random.Generator) -> YSeedNumeric:
    """Generic y-values drawn uniformly from the integers in Y_VALUE_RANGE."""
    low, high = Y_VALUE_RANGE
    draws = rng.integers(low, high + 1, size=matrix.n)
    return YSeedNumeric(tuple(Fraction(int(v)) for v in draws), matrix)


@dataclass(frozen=True)
class ModularSeed:
    """Cluster variables evaluated modulo FINGERPRINT_PRIME at a few random points.

    ``values[i][t]`` is the residue of the (i+1)-th variable at point t. Equal
    clusters have equal residues, so distinct keys certify distinct clusters
    without ever expanding the Laurent polynomials.
    """

    values: Tuple[Tuple[int, ...], ...]
    matrix: ExchangeMatrix

    def __post_init__(self) -> None:
        if len(self.values) != self.matrix.m:
            raise ValueError(f"Seed has {len(self.values)} variables for an exchange matrix with m={self.matrix.m}")

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(sorted(self.values[: self.n]))


def modular_seed(matrix: ExchangeMatrix, rng: np.random.Generator, points: int = 2) -> ModularSeed:
    """Initial variables x_1..x_m at ``points`` uniform nonzero residues each."""
    draws = rng.integers(1, FINGERPRINT_PRIME, size=(matrix.m, points))
    return ModularSeed(tuple(tuple(int(v) for v in row) for row in draws), matrix)


def mutate_modular(seed: ModularSeed, k: int) -> ModularSeed:
    """Exchange relation x_k x'_k = P+ + P- carried out on residues."""
    matrix = seed.matrix
    check_direction(matrix, k)
    p = FINGERPRINT_PRIME
    row = matrix.row(k)
    fresh = []
    for t, outgoing in enumerate(seed.values[k - 1]):
        if outgoing == 0:
            raise DegenerateValue(f"x_{k} vanishes modulo the prime; draw new evaluation points")
        positive = negative = 1
        for j, b in enumerate(row):
            if b > 0:
                positive = positive * pow(seed.values[j][t], b, p) % p
            elif b < 0:
                negative = negative * pow(seed.values[j][t], -b, p) % p
        fresh.append((positive + negative) * pow(outgoing, -1, p) % p)
    values = seed.values[: k - 1] + (tuple(fresh),) + seed.values[k:]
    return ModularSeed(values, mutate_matrix(matrix, k))
