"""Tests for vertex actions, folded matrices and folded seed patterns."""

import unittest
from fractions import Fraction

import pytest

from weavekit.clusterkit import ExchangeMatrix, Quiver, YSeedNumeric, dynkin_matrix, dynkin_seed, initial_seed
from weavekit.foldkit import (
    FoldedMatrix,
    VertexAction,
    check_admissible,
    check_globally_foldable,
    enumerate_folded_pattern,
    fold_matrix,
    fold_y_seed,
    folding_by_name,
    mutate_folded,
    mutate_folded_y,
    orbit_mutation,
    standard_folding,
)
from weavekit.rootdata import DynkinType, cluster_variable_count, seed_count
from weavekit.utils.errors import FrozenDirection, InputError, NonCommuting, NotAdmissible


class TestVertexAction(unittest.TestCase):
    """Test cyclic vertex actions."""

    def test_from_cycles(self):
        """Test that the order is the lcm of the cycle lengths."""
        action = VertexAction.from_cycles(4, [(1, 3, 4)])
        self.assertEqual(action.order, 3)
        self.assertEqual(action.perm, (3, 2, 4, 1))
        self.assertEqual(action.orbits(), [(1, 3, 4), (2,)])

    def test_rejects_wrong_order(self):
        """Test that the generator must satisfy tau^g = id."""
        with self.assertRaises(InputError):
            VertexAction((2, 1), 3)

    def test_rejects_non_permutation(self):
        """Test that images must form a permutation."""
        with self.assertRaises(InputError):
            VertexAction((1, 1), 1)

    def test_json_round_trip(self):
        """Test that to_json and from_json agree."""
        action = VertexAction.from_cycles(6, [(1, 6), (3, 5)])
        self.assertEqual(VertexAction.from_json(action.to_json()), action)
        self.assertEqual(action.to_json(), {"order": 2, "perm": [6, 2, 5, 4, 3, 1]})


class TestAdmissibility(unittest.TestCase):
    """Test the admissibility conditions."""

    def test_standard_foldings_are_admissible(self):
        """Test that each standard folding acts admissibly on its bipartite seed."""
        for name in ("B2", "B3", "C3", "F4", "G2"):
            folding = standard_folding(DynkinType.parse(name))
            report = check_admissible(dynkin_matrix(folding.unfolded), folding.action)
            self.assertTrue(report.ok, f"{name}: {report}")

    def test_arrow_inside_an_orbit(self):
        """Test that condition (c) fails when two vertices of an orbit are joined."""
        quiver = Quiver.from_arrows(2, [(1, 2)])
        report = check_admissible(quiver, VertexAction((2, 1), 2))
        self.assertIn("c", report.failed_conditions)
        self.assertFalse(report.ok)

    def test_non_invariant_matrix(self):
        """Test that condition (b) fails when the action does not preserve the matrix."""
        quiver = Quiver.from_arrows(3, [(1, 2), (2, 3)])
        report = check_admissible(quiver, VertexAction((3, 2, 1), 2))
        self.assertIn("b", report.failed_conditions)

    def test_fold_refuses_inadmissible(self):
        """Test that fold_matrix raises NotAdmissible."""
        quiver = Quiver.from_arrows(2, [(1, 2)])
        with self.assertRaises(NotAdmissible):
            fold_matrix(quiver, VertexAction((2, 1), 2))


def test_d4_to_g2_matrix():
    """The center-source D4 star folds to [[0, 1], [-3, 0]]."""
    folding = standard_folding(DynkinType("G", 2))
    folded = fold_matrix(dynkin_matrix(folding.unfolded), folding.action, folding.orbits)
    assert folded.entries == ((0, 1), (-3, 0))
    assert folded.orbits == ((2,), (1, 3, 4))
    assert folded.principal().d in ((3, 1), (1, 3))


def test_a3_to_b2_matrix():
    """The A3 path folds to a B2 matrix with one double entry."""
    folding = standard_folding(DynkinType("B", 2))
    folded = fold_matrix(dynkin_matrix(folding.unfolded), folding.action, folding.orbits)
    assert sorted(abs(v) for row in folded.entries for v in row) == [0, 0, 1, 2]


def test_folding_by_name():
    """Foldings can be looked up by name or by folded type."""
    assert folding_by_name("E6->F4").folded == DynkinType("F", 4)
    assert folding_by_name("D4->G2").unfolded == DynkinType("D", 4)
    assert folding_by_name("C3").unfolded == DynkinType("D", 4)
    assert folding_by_name("A2n-1->Bn", 3).unfolded == DynkinType("A", 5)


def test_folding_onto_simply_laced_type():
    """There is no folding onto A, D or E."""
    with pytest.raises(InputError):
        standard_folding(DynkinType("A", 3))


@pytest.mark.parametrize("name", ["B2", "B3", "C3", "F4", "G2"])
def test_globally_foldable(name):
    """Every orbit mutation keeps the standard foldings admissible."""
    folding = standard_folding(DynkinType.parse(name))
    assert check_globally_foldable(dynkin_matrix(folding.unfolded), folding.action, 10_000)


def test_not_globally_foldable_when_inadmissible():
    """An inadmissible start is reported without searching."""
    quiver = Quiver.from_arrows(2, [(1, 2)])
    assert not check_globally_foldable(quiver, VertexAction((2, 1), 2), 10)


@pytest.mark.parametrize("name", ["B2", "B3", "C3", "G2", "F4"])
def test_folded_pattern_counts(name):
    """Folded patterns have the seed counts of the folded type."""
    t = DynkinType.parse(name)
    folding = standard_folding(t)
    psi = [Fraction(p) for p in (2, 3, 5, 7)[: len(folding.orbits)]]
    pattern = enumerate_folded_pattern(dynkin_seed(folding.unfolded), folding.action, psi, 10_000, folding.orbits)
    assert len(pattern.vertices) == seed_count(t)
    assert pattern.folded_variable_count() == cluster_variable_count(t)


def test_folded_pattern_needs_one_value_per_orbit():
    """psi has one entry per orbit."""
    folding = standard_folding(DynkinType("G", 2))
    with pytest.raises(NotAdmissible):
        enumerate_folded_pattern(dynkin_seed(folding.unfolded), folding.action, [2], 100, folding.orbits)


class TestFoldedMutation(unittest.TestCase):
    """Test folded mutation against orbit mutation of the unfolded pattern."""

    def setUp(self):
        """Set up the A3 -> B2 folding."""
        self.folding = standard_folding(DynkinType("B", 2))
        self.matrix = dynkin_matrix(self.folding.unfolded)

    def test_folded_matrix_mutation_commutes(self):
        """Test that folding commutes with orbit mutation of the matrix."""
        folded = fold_matrix(self.matrix, self.folding.action, self.folding.orbits)
        for K, orbit in enumerate(self.folding.orbits, start=1):
            mutated = orbit_mutation(self.matrix, orbit, self.folding.action)
            expected = fold_matrix(mutated, self.folding.action, self.folding.orbits)
            self.assertEqual(mutate_folded(folded, K), expected)

    def test_folded_y_mutation_commutes(self):
        """Test that folded y-mutation matches orbit mutation of an orbit-constant y-seed."""
        values = {1: 2, 2: 3, 3: 2}
        yseed = YSeedNumeric.of([values[i] for i in range(1, 4)], self.matrix)
        folded = fold_y_seed(yseed, self.folding.action, self.folding.orbits)
        for K, orbit in enumerate(self.folding.orbits, start=1):
            unfolded = orbit_mutation(yseed, orbit)
            expected = fold_y_seed(unfolded, self.folding.action, self.folding.orbits)
            self.assertEqual(mutate_folded_y(folded, K).values, expected.values)

    def test_fold_y_seed_needs_constant_orbits(self):
        """Test that y-values must agree along each orbit."""
        yseed = YSeedNumeric.of([2, 3, 5], self.matrix)
        with self.assertRaises(NotAdmissible):
            fold_y_seed(yseed, self.folding.action, self.folding.orbits)

    def test_frozen_folded_direction(self):
        """Test that folded directions are bounded by the mutable orbits."""
        folded = fold_matrix(self.matrix, self.folding.action, self.folding.orbits)
        with self.assertRaises(FrozenDirection):
            mutate_folded(folded, 3)

    def test_orbit_mutation_inside_orbit_must_commute(self):
        """Test that mutating a joined pair in both orders disagrees."""
        seed = initial_seed(ExchangeMatrix.of([[0, 1], [-1, 0]]))
        with self.assertRaises(NonCommuting):
            orbit_mutation(seed, (1, 2))

    def test_folded_matrix_json(self):
        """Test that to_json and from_json agree."""
        folded = fold_matrix(self.matrix, self.folding.action, self.folding.orbits)
        self.assertEqual(FoldedMatrix.from_json(folded.to_json()), folded)
