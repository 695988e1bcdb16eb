"""Flags on N-graph faces, microlocal monodromy and the seed of a filling."""

from .flags import (
    BoundaryFlags,
    Flag,
    FlagAssignment,
    flags_from_lines,
    generic_boundary_flags,
    solve_face_flags,
    verify_assignment,
)
from .monodromy import (
    check_equivariance,
    cross_ratio,
    extract_seed,
    monodromy,
    random_gl,
    seed_from_boundary,
    triple_ratio,
)

__all__ = [
    "BoundaryFlags",
    "Flag",
    "FlagAssignment",
    "flags_from_lines",
    "generic_boundary_flags",
    "solve_face_flags",
    "verify_assignment",
    "check_equivariance",
    "cross_ratio",
    "extract_seed",
    "monodromy",
    "random_gl",
    "seed_from_boundary",
    "triple_ratio",
]
