"""Bipartite Coxeter mutation, its orbits, and the facet orbit table."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, TypeVar, Union

from ..rootdata import DynkinType, RootVector, coxeter_number
from ..utils.errors import NotBipartite, OddCoxeterNumber
from .matrix import ExchangeMatrix, Quiver, bipartite_split, mutate_matrix, mutate_quiver
from .seeds import (ExchangeCache, ModularSeed, Seed, YSeedNumeric, denominator_vector, mutate_modular, mutate_seed,
                    mutate_y)

logger = logging.getLogger(__name__)

Mutable = TypeVar("Mutable", Seed, ModularSeed, Quiver, YSeedNumeric, ExchangeMatrix)
Split = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _matrix_of(value: Union[Seed, ModularSeed, Quiver, YSeedNumeric, ExchangeMatrix]) -> ExchangeMatrix:
    return value if isinstance(value, ExchangeMatrix) else value.matrix


def mutate_any(value: Mutable, k: int, cache: Optional[ExchangeCache] = None) -> Mutable:
    """Single mutation for any of the mutable kinds."""
    if isinstance(value, Seed):
        return mutate_seed(value, k, cache)
    if isinstance(value, ModularSeed):
        return mutate_modular(value, k)
    if isinstance(value, Quiver):
        return mutate_quiver(value, k)
    if isinstance(value, YSeedNumeric):
        return mutate_y(value, k)
    if isinstance(value, ExchangeMatrix):
        return mutate_matrix(value, k)
    raise TypeError(f"Cannot mutate {type(value).__name__}")


def coxeter_split(value: Union[Seed, ModularSeed, Quiver, YSeedNumeric, ExchangeMatrix]) -> Split:
    split = bipartite_split(_matrix_of(value))
    if split is None:
        raise NotBipartite("Exchange matrix has a vertex with both incoming and outgoing arrows",
                           fix_hint="Coxeter mutation needs every mutable vertex to be a source or a sink")
    return split


def coxeter_mutation(value: Mutable, split: Optional[Split] = None,
                     cache: Optional[ExchangeCache] = None) -> Mutable:
    """mu_Q = mu_minus mu_plus: mutate all sources first, then all sinks."""
    plus, minus = split if split is not None else coxeter_split(value)
    for k in plus + minus:
        value = mutate_any(value, k, cache)
    return value


def half_coxeter_mutation(value: Mutable, split: Optional[Split] = None) -> Mutable:
    """mu_plus only."""
    plus, _ = split if split is not None else coxeter_split(value)
    for k in plus:
        value = mutate_any(value, k)
    return value


def coxeter_power(value: Mutable, r: int, cache: Optional[ExchangeCache] = None) -> Mutable:
    """mu_Q^r with the bipartition of the starting value."""
    split = coxeter_split(value)
    for _ in range(r):
        value = coxeter_mutation(value, split, cache)
    return value


@dataclass
class CoxeterOrbit:
    """Seeds mu_Q^r(seed) for r = 0, 1, ... until the starting cluster recurs."""

    seeds: List[Union[Seed, ModularSeed]]
    periodic: bool

    @property
    def period(self) -> Optional[int]:
        return len(self.seeds) if self.periodic else None


def coxeter_orbit(seed: Union[Seed, ModularSeed], cap: int) -> CoxeterOrbit:
    """Iterate Coxeter mutation until the initial cluster reappears or ``cap`` seeds are collected.

    With a :class:`ModularSeed` the clusters are compared by their residues:
    distinct keys prove distinct clusters, and the cost stays linear in
    ``cap`` however fast the Laurent polynomials grow.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    split = coxeter_split(seed)
    cache = None
    if isinstance(seed, Seed):
        cache = ExchangeCache()
        seed = cache.intern_seed(seed)
    seeds = [seed]
    current = seed
    while len(seeds) < cap:
        current = coxeter_mutation(current, split, cache)
        if current.key == seed.key:
            logger.info("Coxeter orbit closed after %d steps", len(seeds))
            return CoxeterOrbit(seeds, periodic=True)
        seeds.append(current)
    # one more step decides whether the cap happens to equal the period
    if coxeter_mutation(current, split, cache).key == seed.key:
        return CoxeterOrbit(seeds, periodic=True)
    logger.info("Coxeter orbit not closed within %d steps", cap)
    return CoxeterOrbit(seeds, periodic=False)


def expected_coxeter_period(t: DynkinType) -> int:
    """(h+2)/2 for even Coxeter number h, h+2 otherwise."""
    h = coxeter_number(t)
    return (h + 2) // 2 if h % 2 == 0 else h + 2


def facet_orbit_table(t: DynkinType, seed: Optional[Seed] = None) -> Dict[Tuple[int, int], RootVector]:
    """Labels of the facets mu_Q^r(F_{-alpha_i}) for 0 <= r <= h/2.

    Coxeter mutation acts on the exchange graph commuting with labeled
    mutations, so the image of the facet of the i-th initial variable is
    the facet of the i-th variable of mu_Q^r of the initial seed.
    """
    h = coxeter_number(t)
    if h % 2:
        raise OddCoxeterNumber(f"{t} has odd Coxeter number {h}",
                               fix_hint="The facet orbit table is defined for even Coxeter numbers only")
    if seed is None:
        from .finite_type import dynkin_seed
        seed = dynkin_seed(t)
    split = coxeter_split(seed)
    cache = ExchangeCache()
    table: Dict[Tuple[int, int], RootVector] = {}
    current = cache.intern_seed(seed)
    for r in range(h // 2 + 1):
        for i in range(1, seed.n + 1):
            table[(r, i)] = denominator_vector(current.variables[i - 1], seed.n)
        current = coxeter_mutation(current, split, cache)
    return table


def normal_form_walk(seed: Seed, r: int, directions: Sequence[int],
                     cache: Optional[ExchangeCache] = None) -> List[Seed]:
    """Seeds visited by mu_Q^r followed by the ordinary mutation sequence."""
    if cache is None:
        cache = ExchangeCache()
    split = coxeter_split(seed) if r else None
    current = cache.intern_seed(seed)
    visited = [current]
    for _ in range(r):
        current = coxeter_mutation(current, split, cache)
        visited.append(current)
    for k in directions:
        current = mutate_seed(current, k, cache)
        visited.append(current)
    return visited
