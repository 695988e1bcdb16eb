"""Exact rational linear algebra on sympy column vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Sequence

import numpy as np
import sympy

Vector = sympy.Matrix
Wedge = Callable[[Vector, Vector], sympy.Rational]

DRAW_RANGE = (-9, 9)


def column(values: Sequence) -> Vector:
    """Column vector with exact rational entries; strings like ``"3/4"`` are accepted."""
    return sympy.Matrix([sympy.Rational(str(v)) if isinstance(v, (str, Fraction)) else sympy.Rational(v)
                         for v in values])


def to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return sympy.Matrix.hstack(*vectors).rank()


def parallel(u: Vector, v: Vector) -> bool:
    """True when u and v span the same line (or one of them is zero)."""
    return rank([u, v]) < 2


def same_span(first: Sequence[Vector], second: Sequence[Vector]) -> bool:
    return rank(list(first) + list(second)) == rank(first) == rank(second)


def meet(p: Vector, q: Vector) -> Vector:
    """Line common to the planes with covectors p and q in 3-space (or the span of two lines)."""
    return p.cross(q)


def pairing(covector: Vector, vector: Vector) -> sympy.Rational:
    return (covector.T * vector)[0, 0]


def plane_basis(covector: Vector) -> List[Vector]:
    return covector.T.nullspace()


def complement(vectors: Sequence[Vector], dim: int) -> List[Vector]:
    """Vectors spanning the orthogonal complement of the span; over the rationals it is a linear complement."""
    if not vectors:
        return [sympy.eye(dim).col(c) for c in range(dim)]
    return sympy.Matrix.hstack(*vectors).T.nullspace()


def extend_to_basis(vectors: Sequence[Vector], dim: int) -> List[Vector]:
    """Append standard basis vectors until the list spans the whole space."""
    basis = list(vectors)
    for c in range(dim):
        if len(basis) == dim:
            break
        candidate = sympy.eye(dim).col(c)
        if rank(basis + [candidate]) > len(basis):
            basis.append(candidate)
    return basis


def quotient_wedge(lower: Sequence[Vector], upper: Sequence[Vector], dim: int) -> Wedge:
    """Determinant pairing on the 2-dimensional quotient span(upper) / span(lower).

    ``upper`` must contain ``lower`` and have two more dimensions. The value
    is defined up to one overall factor, which cancels in cross ratios.
    """
    lower = list(lower)
    outside = complement(upper, dim)

    def wedge(u: Vector, v: Vector) -> sympy.Rational:
        return sympy.Matrix.hstack(*(lower + [u, v] + outside)).det()

    return wedge


def plane_wedge(u: Vector, v: Vector) -> sympy.Rational:
    return u[0] * v[1] - u[1] * v[0]


def random_vector(rng: np.random.Generator, dim: int) -> Vector:
    low, high = DRAW_RANGE
    while True:
        draw = rng.integers(low, high + 1, size=dim)
        if draw.any():
            return sympy.Matrix([int(x) for x in draw])


def random_vector_in(rng: np.random.Generator, covector: Vector) -> Vector:
    """Random nonzero vector on the plane with the given covector."""
    p, q = plane_basis(covector)
    low, high = DRAW_RANGE
    while True:
        s, t = (int(x) for x in rng.integers(low, high + 1, size=2))
        if s or t:
            return s * p + t * q


def random_covector_through(rng: np.random.Generator, vector: Vector) -> Vector:
    """Covector of a random plane containing the given line."""
    while True:
        covector = vector.cross(random_vector(rng, 3))
        if not covector.is_zero_matrix:
            return covector
