"""Tests for Dynkin types, Cartan matrices and root data."""

import unittest

import pytest

from weavekit.rootdata import (
    CartanMatrix,
    DynkinType,
    RootVector,
    almost_positive_roots,
    cartan_matrix,
    cluster_variable_count,
    coxeter_number,
    positive_roots,
    seed_count,
    symmetrizer,
    tripod_relabeling,
    tripod_type,
)
from weavekit import rootdata
from weavekit.utils.errors import InvalidDynkinType, NotCartanMatrix, RootClosureDiverged
from weavekit.utils.result import ErrorCategory


class TestDynkinType(unittest.TestCase):
    """Test parsing and validation of Dynkin types."""

    def test_parse_accepts_common_spellings(self):
        """Test that A3, e6 and D_4 all parse."""
        self.assertEqual(DynkinType.parse("A3"), DynkinType("A", 3))
        self.assertEqual(DynkinType.parse("e6"), DynkinType("E", 6))
        self.assertEqual(DynkinType.parse("D_4"), DynkinType("D", 4))

    def test_rejects_out_of_range_ranks(self):
        """Test that ranks outside the classification are refused."""
        for family, rank in (("D", 3), ("E", 9), ("G", 3), ("F", 5), ("A", 0)):
            with self.assertRaises(InvalidDynkinType):
                DynkinType(family, rank)

    def test_rejects_garbage(self):
        """Test that unparseable names raise with a fix hint."""
        with self.assertRaises(InvalidDynkinType) as ctx:
            DynkinType.parse("X")
        self.assertIn("A3", ctx.exception.fix_hint)

    def test_json_round_trip(self):
        """Test that to_json and from_json agree."""
        t = DynkinType("F", 4)
        self.assertEqual(DynkinType.from_json(t.to_json()), t)
        self.assertEqual(str(t), "F4")


class TestCartanMatrix(unittest.TestCase):
    """Test Cartan matrix validation."""

    def test_g2_is_valid(self):
        """Test that the G2 matrix passes and has the expected symmetrizer ratio."""
        cartan = cartan_matrix(DynkinType("G", 2))
        entries = sorted([cartan[0, 1], cartan[1, 0]])
        self.assertEqual(entries, [-3, -1])

    def test_bad_diagonal(self):
        """Test that a diagonal entry other than 2 is refused."""
        with self.assertRaises(NotCartanMatrix):
            CartanMatrix.of([[2, -1], [-1, 1]])

    def test_positive_off_diagonal(self):
        """Test that positive off-diagonal entries are refused."""
        with self.assertRaises(NotCartanMatrix):
            CartanMatrix.of([[2, 1], [1, 2]])

    def test_zero_pattern_must_match(self):
        """Test that c_ij = 0 forces c_ji = 0."""
        with self.assertRaises(NotCartanMatrix):
            CartanMatrix.of([[2, 0], [-1, 2]])


@pytest.mark.parametrize(
    "name, seeds",
    [("A1", 2), ("A2", 5), ("A3", 14), ("A4", 42), ("B2", 6), ("B3", 20), ("C3", 20),
     ("D4", 50), ("G2", 8), ("F4", 105), ("E6", 833), ("E7", 4160), ("E8", 25080)],
)
def test_seed_count_table(name, seeds):
    """Closed formulas reproduce the enumeration table."""
    assert seed_count(DynkinType.parse(name)) == seeds


@pytest.mark.parametrize(
    "name, variables",
    [("A1", 2), ("A2", 5), ("A3", 9), ("A4", 14), ("A5", 20), ("B3", 12), ("C3", 12),
     ("D4", 16), ("E6", 42), ("E7", 70), ("E8", 128), ("F4", 28), ("G2", 8)],
)
def test_cluster_variable_count_table(name, variables):
    """Cluster variables are counted by almost positive roots."""
    t = DynkinType.parse(name)
    assert cluster_variable_count(t) == variables
    assert len(almost_positive_roots(t)) == variables


@pytest.mark.parametrize("name, h", [("A3", 4), ("D4", 6), ("E6", 12), ("E7", 18), ("E8", 30), ("F4", 12), ("G2", 6), ("B3", 6)])
def test_coxeter_number(name, h):
    """Coxeter numbers of a few types."""
    assert coxeter_number(DynkinType.parse(name)) == h


def test_positive_roots_of_a2():
    """A2 has the positive roots a1, a2 and a1+a2."""
    roots = {r.coords for r in positive_roots(DynkinType("A", 2))}
    assert roots == {(1, 0), (0, 1), (1, 1)}


def test_symmetrizer_is_primitive():
    """The symmetrizer is divided by the gcd of its entries."""
    assert symmetrizer([[2, -2], [-1, 2]], 1) == (1, 2)
    assert symmetrizer([[2, -1], [-3, 2]], 1) == (3, 1)
    assert symmetrizer([[0, 4], [-4, 0]], -1) == (1, 1)


def test_runaway_root_closure_is_an_internal_error(monkeypatch):
    """A closure that outlives its round bound raises a categorized error."""
    monkeypatch.setattr(rootdata, "coxeter_number", lambda t: 0)
    with pytest.raises(RootClosureDiverged) as info:
        positive_roots(DynkinType("A", 3))
    assert info.value.category == ErrorCategory.INTERNAL_ERROR
    assert info.value.fix_hint


def test_almost_positive_roots_start_with_negative_simples():
    """The first n almost positive roots are the negative simple roots."""
    roots = almost_positive_roots(DynkinType("A", 3))
    assert [r.coords for r in roots[:3]] == [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    assert all(r.is_negative_simple for r in roots[:3])
    assert all(r.is_positive for r in roots[3:])


def test_root_vector_formatting():
    """Roots print as sums of simple roots."""
    assert str(RootVector((1, 1, 0))) == "a1+a2"
    assert str(RootVector((0, -1, 0))) == "-a2"
    assert str(RootVector.simple(3, 2)) == "a2"


@pytest.mark.parametrize(
    "params, expected",
    [((1, 1, 1), "A1"), ((1, 2, 3), "A4"), ((2, 2, 2), "D4"), ((2, 2, 5), "D7"),
     ((2, 3, 3), "E6"), ((2, 3, 4), "E7"), ((2, 3, 5), "E8"), ((3, 2, 2), "D5")],
)
def test_tripod_type(params, expected):
    """Finite tripods are A, D or E."""
    assert tripod_type(*params) == DynkinType.parse(expected)


@pytest.mark.parametrize("params", [(3, 3, 3), (2, 4, 4), (2, 3, 6)])
def test_tripod_type_infinite(params):
    """Tripods with 1/a+1/b+1/c <= 1 are of infinite type."""
    assert tripod_type(*params) is None


def test_tripod_relabeling_is_a_bijection():
    """The relabelling is a permutation of 1..n."""
    for params in ((1, 2, 3), (2, 2, 3), (2, 3, 3)):
        mapping = tripod_relabeling(*params)
        n = sum(params) - 2
        assert sorted(mapping) == list(range(1, n + 1))
        assert sorted(mapping.values()) == list(range(1, n + 1))


def test_tripod_relabeling_refuses_infinite_type():
    """No relabelling exists for infinite type."""
    with pytest.raises(InvalidDynkinType):
        tripod_relabeling(3, 3, 3)
