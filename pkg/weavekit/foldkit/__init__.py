"""Folding of simply-laced seed patterns along cyclic vertex actions."""

from .action import Folding, VertexAction, folding_by_name, standard_folding
from .folding import (
    AdmissibilityReport,
    FoldedClusterNumeric,
    FoldedMatrix,
    FoldedPattern,
    FoldedSeedNumeric,
    check_admissible,
    check_globally_foldable,
    enumerate_folded_pattern,
    fold_matrix,
    fold_y_seed,
    mutate_folded,
    mutate_folded_x,
    mutate_folded_y,
    orbit_mutation,
)

__all__ = [
    "Folding",
    "VertexAction",
    "folding_by_name",
    "standard_folding",
    "AdmissibilityReport",
    "FoldedClusterNumeric",
    "FoldedMatrix",
    "FoldedPattern",
    "FoldedSeedNumeric",
    "check_admissible",
    "check_globally_foldable",
    "enumerate_folded_pattern",
    "fold_matrix",
    "fold_y_seed",
    "mutate_folded",
    "mutate_folded_x",
    "mutate_folded_y",
    "orbit_mutation",
]
