"""Seeds, mutations and exchange graphs of cluster algebras."""

from .laurent import LaurentPoly
from .matrix import (
    ExchangeMatrix,
    Quiver,
    bipartite_split,
    cartan_counterpart,
    linear_quiver,
    mutate_matrix,
    mutate_quiver,
    tripod_quiver,
)
from .seeds import (
    ClusterKey,
    ExchangeCache,
    ModularSeed,
    Seed,
    YSeedNumeric,
    denominator_vector,
    initial_seed,
    modular_seed,
    mutate_modular,
    mutate_seed,
    mutate_y,
    random_y_seed,
)
from .coxeter import (
    CoxeterOrbit,
    coxeter_mutation,
    coxeter_orbit,
    coxeter_power,
    expected_coxeter_period,
    facet_orbit_table,
)
from .exchange import ExchangeGraph, enumerate_exchange_graph
from .finite_type import detect_finite_type, dynkin_matrix, dynkin_seed
from .brick import quiver_from_brick

__all__ = [
    "LaurentPoly",
    "ExchangeMatrix",
    "Quiver",
    "bipartite_split",
    "cartan_counterpart",
    "linear_quiver",
    "mutate_matrix",
    "mutate_quiver",
    "tripod_quiver",
    "ClusterKey",
    "ExchangeCache",
    "ModularSeed",
    "Seed",
    "YSeedNumeric",
    "denominator_vector",
    "initial_seed",
    "modular_seed",
    "mutate_modular",
    "mutate_seed",
    "mutate_y",
    "random_y_seed",
    "CoxeterOrbit",
    "coxeter_mutation",
    "coxeter_orbit",
    "coxeter_power",
    "expected_coxeter_period",
    "facet_orbit_table",
    "ExchangeGraph",
    "enumerate_exchange_graph",
    "detect_finite_type",
    "dynkin_matrix",
    "dynkin_seed",
    "quiver_from_brick",
]
