"""Tests for flags, ratios and microlocal monodromy."""

import unittest
from fractions import Fraction

import numpy as np
import pytest

from weavekit.clusterkit import mutate_y
from weavekit.flagkit import (
    BoundaryFlags,
    Flag,
    check_equivariance,
    cross_ratio,
    extract_seed,
    flags_from_lines,
    generic_boundary_flags,
    random_gl,
    seed_from_boundary,
    solve_face_flags,
    triple_ratio,
    verify_assignment,
)
from weavekit.flagkit.linalg import column
from weavekit.ngraphkit import BraidWord, build_linear, build_theta, build_tripod, legendrian_mutate, linear_word
from weavekit.utils.errors import (
    BoundaryMismatch,
    ConstraintViolated,
    InconsistentClosure,
    InputError,
    InteriorFace,
    UnsupportedConfiguration,
    ZeroPairing,
    ZeroWedge,
)

LINES = [(1, 0), (0, 1), (1, 1), (1, 2)]


class TestRatios(unittest.TestCase):
    """Test cross ratios and triple ratios."""

    def test_cross_ratio_value(self):
        """Test a cross ratio computed by hand."""
        self.assertEqual(cross_ratio(*LINES), Fraction(1, 2))

    def test_cyclic_shift_inverts(self):
        """Test that shifting the four lines by one inverts the cross ratio."""
        shifted = LINES[1:] + LINES[:1]
        self.assertEqual(cross_ratio(*shifted), 1 / cross_ratio(*LINES))

    def test_scaling_a_line(self):
        """Test that the cross ratio only depends on the lines."""
        scaled = [(3, 0), (0, -2), (1, 1), (5, 10)]
        self.assertEqual(cross_ratio(*scaled), cross_ratio(*LINES))

    def test_zero_wedge(self):
        """Test that consecutive equal lines are degenerate."""
        with self.assertRaises(ZeroWedge):
            cross_ratio((1, 0), (2, 0), (1, 1), (1, 2))

    def test_triple_ratio_senses(self):
        """Test that the lower triple ratio is the inverse of the upper one."""
        lines = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        planes = [(0, 1, 2), (3, 0, 1), (1, 2, 0)]
        upper = triple_ratio(*lines, *planes)
        self.assertEqual(upper, Fraction(12))
        self.assertEqual(triple_ratio(*lines, *planes, sense="lower"), 1 / upper)

    def test_triple_ratio_zero_pairing(self):
        """Test that a line on a plane it is paired with is degenerate."""
        with self.assertRaises(ZeroPairing):
            triple_ratio((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0), (3, 0, 1), (1, 2, 0))

    def test_triple_ratio_sense(self):
        """Test that unknown senses are refused."""
        with self.assertRaises(ValueError):
            triple_ratio((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 2), (3, 0, 1), (1, 2, 0), sense="middle")


class TestFlags(unittest.TestCase):
    """Test flags and boundary flags."""

    def test_flag_json(self):
        """Test that a flag survives its JSON form."""
        flag = Flag.of([(1, 0, 0), ("1/2", 1, 0), (0, 3, 1)])
        self.assertEqual(Flag.from_json(flag.to_json()), flag)
        self.assertEqual(flag.N, 3)

    def test_dependent_basis(self):
        """Test that a flag needs independent columns."""
        with self.assertRaises(InputError):
            Flag.of([(1, 2), (2, 4)])

    def test_line_plane_incidence(self):
        """Test that the line must lie on the plane."""
        flag = Flag.from_line_plane(column((1, 0, 0)), column((0, 0, 1)))
        self.assertTrue(flag.same_step(Flag.of([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), 2))
        with self.assertRaises(ConstraintViolated):
            Flag.from_line_plane(column((0, 0, 1)), column((0, 0, 1)))

    def test_boundary_flags(self):
        """Test that consecutive arc flags must change across each letter."""
        word = BraidWord(2, (1, 1, 1, 1))
        bf = flags_from_lines(word, LINES)
        self.assertEqual(len(bf), 4)
        self.assertEqual(BoundaryFlags.from_json(bf.to_json()), bf)
        with self.assertRaises(ConstraintViolated):
            flags_from_lines(word, [(1, 0), (2, 0), (1, 1), (1, 2)])
        with self.assertRaises(InputError):
            flags_from_lines(word, LINES[:3])


class TestFaceFlags(unittest.TestCase):
    """Test solving face flags from boundary flags."""

    def test_solve_linear(self):
        """Test that every inside face of G(A_2) gets a flag satisfying the edge conditions."""
        g, _ = build_linear(2)
        bf = generic_boundary_flags(g.boundary_word(), 0, g)
        fa = solve_face_flags(g, bf)
        inside = [f.index for f in g.faces() if not f.outside]
        self.assertEqual(sorted(fa.flags), sorted(inside))
        verify_assignment(g, fa.flags)

    def test_solve_tripod(self):
        """Test that G(1,1,1) has consistent face flags for a generic draw."""
        g, _ = build_tripod(1, 1, 1)
        fa = solve_face_flags(g, generic_boundary_flags(g.boundary_word(), 3, g))
        verify_assignment(g, fa.flags)

    def test_verify_names_the_bad_edge(self):
        """Test that copying a flag across a wall is caught at that edge."""
        g, _ = build_linear(1)
        fa = solve_face_flags(g, generic_boundary_flags(g.boundary_word(), 0, g))
        face_of = g.face_of()
        e = next(e for e, edge in enumerate(g.edges) if edge.color == 1)
        flags = dict(fa.flags)
        flags[face_of[2 * e + 1]] = flags[face_of[2 * e]]
        with self.assertRaises(ConstraintViolated) as ctx:
            verify_assignment(g, flags)
        bad = ctx.exception.edge
        self.assertIn(face_of[2 * e + 1], (face_of[2 * bad], face_of[2 * bad + 1]))

    def test_interior_face(self):
        """Test that a 2-graph face away from the boundary is not determined."""
        g, _ = build_theta()
        bf = flags_from_lines(g.boundary_word(), [(1, 0), (0, 1)])
        with self.assertRaises(InteriorFace):
            solve_face_flags(g, bf)

    def test_boundary_mismatch(self):
        """Test that boundary flags must be drawn for the graph's own word."""
        g, _ = build_linear(2)
        bf = flags_from_lines(linear_word(1), LINES)
        with self.assertRaises(BoundaryMismatch):
            solve_face_flags(g, bf)

    def test_three_strands_need_a_graph(self):
        """Test that 3-strand boundary flags are drawn against a graph."""
        with self.assertRaises(InconsistentClosure):
            generic_boundary_flags(build_tripod(1, 1, 1)[0].boundary_word(), 0)

    def test_four_strands_unsupported(self):
        """Test that N = 4 is out of reach."""
        with self.assertRaises(UnsupportedConfiguration):
            generic_boundary_flags(BraidWord(4, (1, 2, 3, 1, 2, 3)), 0)

    def test_draw_is_reproducible(self):
        """Test that the same seed gives the same boundary flags."""
        word = linear_word(3)
        self.assertEqual(generic_boundary_flags(word, 7), generic_boundary_flags(word, 7))


class TestMonodromy(unittest.TestCase):
    """Test the seed read off a filling."""

    def test_a1_mutation_inverts(self):
        """Test that mutating G(A_1) inverts its single monodromy."""
        g, cycles = build_linear(1)
        bf = generic_boundary_flags(g.boundary_word(), 0, g)
        before = seed_from_boundary(g, cycles, bf)
        mutated, moved = legendrian_mutate(g, cycles, 1)
        after = seed_from_boundary(mutated, moved, bf)
        self.assertEqual(after.values, (1 / before.values[0],))

    def test_seed_quiver(self):
        """Test that the seed carries the intersection quiver."""
        g, cycles = build_linear(3)
        seed = seed_from_boundary(g, cycles, generic_boundary_flags(g.boundary_word(), 1, g))
        self.assertEqual(seed.n, 3)
        self.assertTrue(all(v != 0 for v in seed.values))

    def test_gl_invariance(self):
        """Test that moving every flag by one matrix keeps the monodromies."""
        rng = np.random.default_rng(11)
        for g, cycles in (build_linear(3), build_tripod(1, 1, 2)):
            fa = solve_face_flags(g, generic_boundary_flags(g.boundary_word(), rng, g))
            moved = fa.transformed(random_gl(rng, g.N))
            self.assertEqual(extract_seed(g, cycles, moved).values, extract_seed(g, cycles, fa).values)


@pytest.mark.parametrize("family,params", [("linear", (2,)), ("linear", (4,)), ("tripod", (1, 1, 1)),
                                           ("tripod", (1, 2, 2))])
def test_mutation_is_equivariant(family, params):
    """Legendrian mutation X-mutates the seed for every cycle of the small families."""
    g, cycles = (build_linear if family == "linear" else build_tripod)(*params)
    bf = generic_boundary_flags(g.boundary_word(), 5, g)
    for spec in cycles:
        assert check_equivariance(g, cycles, bf, spec.label)


def test_equivariance_matches_x_mutation():
    """The seed of the mutated filling is the X-mutated seed."""
    g, cycles = build_linear(3)
    bf = generic_boundary_flags(g.boundary_word(), 2, g)
    mutated, moved = legendrian_mutate(g, cycles, 2)
    expected = mutate_y(seed_from_boundary(g, cycles, bf), 2)
    assert seed_from_boundary(mutated, moved, bf) == expected
