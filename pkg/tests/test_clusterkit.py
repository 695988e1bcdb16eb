"""Tests for seeds, mutation, exchange graphs and Coxeter mutation."""

import shutil
import tempfile
import time
import unittest
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from weavekit.clusterkit import (
    ExchangeCache,
    ExchangeMatrix,
    LaurentPoly,
    ModularSeed,
    Quiver,
    YSeedNumeric,
    bipartite_split,
    cartan_counterpart,
    coxeter_mutation,
    coxeter_orbit,
    coxeter_power,
    denominator_vector,
    detect_finite_type,
    dynkin_matrix,
    dynkin_seed,
    enumerate_exchange_graph,
    expected_coxeter_period,
    facet_orbit_table,
    initial_seed,
    linear_quiver,
    modular_seed,
    mutate_matrix,
    mutate_modular,
    mutate_quiver,
    mutate_seed,
    mutate_y,
    quiver_from_brick,
    random_y_seed,
    tripod_quiver,
)
from weavekit.clusterkit.coxeter import coxeter_split, normal_form_walk
from weavekit.clusterkit.laurent import FINGERPRINT_PRIME
from weavekit.rootdata import DynkinType, almost_positive_roots, cluster_variable_count, seed_count
from weavekit.utils.errors import (
    CapExceeded,
    DegenerateValue,
    FrozenDirection,
    NonLaurentDivision,
    NotBipartite,
    NotSkewSymmetrizable,
    OddCoxeterNumber,
)


def x(m, i):
    return LaurentPoly.variable(m, i)


class TestLaurentPoly(unittest.TestCase):
    """Test exact Laurent polynomial arithmetic."""

    def test_exact_division(self):
        """Test that (x1 x2 + x2) / x2 = x1 + 1."""
        numerator = x(2, 1) * x(2, 2) + x(2, 2)
        self.assertEqual(numerator.exact_div(x(2, 2)), x(2, 1) + LaurentPoly.constant(2, 1))

    def test_non_laurent_division(self):
        """Test that dividing by a non-monomial that does not divide raises."""
        with self.assertRaises(NonLaurentDivision):
            x(2, 1).exact_div(x(2, 1) + x(2, 2))

    def test_negative_exponents_are_normalized(self):
        """Test that equal Laurent polynomials built differently compare equal and hash alike."""
        a = LaurentPoly.from_terms(2, [((-1, 0), 1), ((-1, 1), 1)])
        b = (LaurentPoly.constant(2, 1) + x(2, 2)) * LaurentPoly.monomial(2, (-1, 0))
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(a.min_exponents(), (-1, 0))

    def test_evaluate(self):
        """Test evaluation at a rational point."""
        value = LaurentPoly.from_terms(2, [((-1, 0), 1), ((-1, 1), 1)])
        self.assertEqual(value.evaluate([Fraction(2), Fraction(3)]), Fraction(2))

    def test_json_round_trip(self):
        """Test that to_json and from_json agree."""
        value = LaurentPoly.from_terms(3, [((-1, -1, 0), 1), ((0, -1, 2), 3)])
        self.assertEqual(LaurentPoly.from_json(3, value.to_json()), value)


class TestExchangeMatrix(unittest.TestCase):
    """Test matrix validation and mutation."""

    def test_rejects_non_skew_symmetrizable(self):
        """Test that a principal part with matching signs is refused."""
        with self.assertRaises(NotSkewSymmetrizable):
            ExchangeMatrix.of([[0, 1], [1, 0]])

    def test_skew_symmetrizer_of_b2(self):
        """Test that the B2 matrix has a nontrivial skew-symmetrizer."""
        matrix = ExchangeMatrix.of([[0, 1], [-2, 0]])
        d = matrix.d
        self.assertNotEqual(d[0], d[1])
        self.assertEqual(d[0] * matrix.entries[0][1], -d[1] * matrix.entries[1][0])

    def test_mutation_is_an_involution(self):
        """Test that mutating twice at the same direction gives the matrix back."""
        matrix = dynkin_matrix(DynkinType("D", 4))
        for k in range(1, 5):
            self.assertEqual(mutate_matrix(mutate_matrix(matrix, k), k), matrix)

    def test_frozen_direction(self):
        """Test that frozen directions cannot be mutated."""
        matrix = ExchangeMatrix.of([[0, 1, 1], [-1, 0, 0]])
        with self.assertRaises(FrozenDirection):
            mutate_matrix(matrix, 3)

    def test_cartan_counterpart(self):
        """Test that the counterpart of a bipartite A2 matrix is the A2 Cartan matrix."""
        cartan = cartan_counterpart(ExchangeMatrix.of([[0, 1], [-1, 0]]))
        self.assertEqual(cartan.entries, ((2, -1), (-1, 2)))


class TestQuivers(unittest.TestCase):
    """Test the standard quivers."""

    def test_linear_quiver_alternates(self):
        """Test that the A_n path alternates orientation."""
        self.assertEqual(linear_quiver(4).arrows(), [(1, 2, 1), (3, 2, 1), (3, 4, 1)])

    def test_tripod_quiver_shape(self):
        """Test that Q(a,b,c) has a+b+c-2 vertices and a bipartite orientation."""
        quiver = tripod_quiver(2, 3, 4)
        self.assertEqual(quiver.m, 7)
        self.assertTrue(quiver.is_acyclic())
        self.assertIsNotNone(bipartite_split(quiver))

    def test_mutation_reverses_arrows_at_k(self):
        """Test quiver mutation at a sink of A2."""
        mutated = mutate_quiver(Quiver.from_arrows(2, [(1, 2)]), 2)
        self.assertEqual(mutated.arrows(), [(2, 1, 1)])

    def test_coxeter_mutation_of_bipartite_quiver(self):
        """Test that mu_minus mu_plus reverses every arrow twice."""
        quiver = tripod_quiver(2, 2, 2)
        self.assertEqual(coxeter_mutation(quiver), quiver)

    def test_coxeter_split_refuses_oriented_cycle(self):
        """Test that a quiver with a vertex of mixed type has no bipartition."""
        with self.assertRaises(NotBipartite):
            coxeter_split(Quiver.from_arrows(3, [(1, 2), (2, 3)]))

    def test_brick_quiver(self):
        """Test that the brick quiver of s1 s2 s1 s2^2 has type A3."""
        quiver = quiver_from_brick([1, 2, 1, 2, 2])
        self.assertEqual(quiver.m, 3)
        self.assertEqual(detect_finite_type(quiver.matrix, 100), [DynkinType("A", 3)])


class TestYSeeds(unittest.TestCase):
    """Test X-mutation of numeric y-seeds."""

    def test_mutation_inverts_y_k(self):
        """Test that y_k becomes 1/y_k."""
        yseed = YSeedNumeric.of([3], ExchangeMatrix.of([[0]]))
        self.assertEqual(mutate_y(yseed, 1).values, (Fraction(1, 3),))

    def test_a2_formula(self):
        """Test the X-mutation rule on A2 with b_12 = 1."""
        yseed = YSeedNumeric.of([2, 5], ExchangeMatrix.of([[0, 1], [-1, 0]]))
        mutated = mutate_y(yseed, 1)
        # b_21 = -1: y_2 (1 + y_1)
        self.assertEqual(mutated.values, (Fraction(1, 2), Fraction(15)))

    def test_involution(self):
        """Test that X-mutation is an involution."""
        rng = np.random.default_rng(7)
        yseed = random_y_seed(dynkin_matrix(DynkinType("A", 4)), rng)
        for k in range(1, 5):
            self.assertEqual(mutate_y(mutate_y(yseed, k), k), yseed)

    def test_degenerate_value(self):
        """Test that 1 + y_k = 0 is refused."""
        yseed = YSeedNumeric.of([-1, 2], ExchangeMatrix.of([[0, 1], [-1, 0]]))
        with self.assertRaises(DegenerateValue):
            mutate_y(yseed, 1)


def test_a2_cluster_variables():
    """The A2 pattern has exactly five cluster variables."""
    graph = enumerate_exchange_graph(dynkin_seed(DynkinType("A", 2)), 100)
    expected = {
        x(2, 1),
        x(2, 2),
        LaurentPoly.from_terms(2, [((-1, 0), 1), ((-1, 1), 1)]),
        LaurentPoly.from_terms(2, [((0, -1), 1), ((1, -1), 1)]),
        LaurentPoly.from_terms(2, [((-1, -1), 1), ((0, -1), 1), ((-1, 0), 1)]),
    }
    assert graph.cluster_variables() == expected


def test_a2_denominators_are_almost_positive_roots():
    """Denominator vectors give a bijection onto the almost positive roots."""
    t = DynkinType("A", 2)
    graph = enumerate_exchange_graph(dynkin_seed(t), 100)
    found = sorted(denominator_vector(v, 2).coords for v in graph.cluster_variables())
    assert found == sorted(r.coords for r in almost_positive_roots(t))


def test_a2_five_cycle():
    """Alternating mutations return to the initial cluster after five steps."""
    seed = dynkin_seed(DynkinType("A", 2))
    walk = normal_form_walk(seed, 0, [1, 2, 1, 2, 1])
    assert walk[-1].key == seed.key
    assert len({s.key for s in walk[:5]}) == 5


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"])
def test_exchange_graph_counts(name):
    """Seed and variable counts match the table and the graph is n-regular."""
    t = DynkinType.parse(name)
    graph = enumerate_exchange_graph(dynkin_seed(t), 1000)
    assert len(graph.vertices) == seed_count(t)
    assert len(graph.cluster_variables()) == cluster_variable_count(t)
    assert graph.is_regular()
    assert graph.is_connected()


def test_e6_exchange_graph():
    """E6 has 833 seeds and 42 cluster variables."""
    t = DynkinType("E", 6)
    graph = enumerate_exchange_graph(dynkin_seed(t), 5000)
    assert len(graph.vertices) == 833
    assert len(graph.cluster_variables()) == 42


@pytest.mark.long
@pytest.mark.parametrize("name, seeds", [("E7", 4160), ("E8", 25080)])
def test_large_exceptional_exchange_graphs(name, seeds):
    """E7 and E8 seed counts."""
    graph = enumerate_exchange_graph(dynkin_seed(DynkinType.parse(name)), 100_000)
    assert len(graph.vertices) == seeds


def test_tripod_enumeration_matches_d4():
    """Q(2,2,2) is of type D4."""
    graph = enumerate_exchange_graph(initial_seed(tripod_quiver(2, 2, 2).matrix), 1000)
    assert len(graph.vertices) == 50


def test_cap_exceeded_for_infinite_type():
    """Enumeration of an infinite type stops at the cap."""
    with pytest.raises(CapExceeded):
        enumerate_exchange_graph(initial_seed(tripod_quiver(3, 3, 3).matrix), 200)


def test_cache_reuses_variables():
    """A shared cache answers repeated exchanges without new divisions."""
    cache = ExchangeCache()
    seed = dynkin_seed(DynkinType("A", 3))
    enumerate_exchange_graph(seed, 100, cache=cache)
    divisions = cache.divisions
    enumerate_exchange_graph(seed, 100, cache=cache)
    assert cache.divisions == divisions
    assert len(cache) == 9


def test_exchange_graph_exports():
    """JSON and DOT exports list every seed."""
    graph = enumerate_exchange_graph(dynkin_seed(DynkinType("A", 2)), 100)
    data = graph.to_json()
    assert len(data["vertices"]) == 5
    assert len(data["edges"]) == 5
    dot = graph.to_dot()
    assert dot.startswith("graph exchange {")
    assert dot.count(" -- ") == 5


def test_mutation_involution_on_seeds():
    """Seed mutation is an involution along random walks."""
    rng = np.random.default_rng(3)
    cache = ExchangeCache()
    seed = dynkin_seed(DynkinType("D", 4))
    for _ in range(50):
        seed = mutate_seed(seed, int(rng.integers(1, 5)), cache)
        k = int(rng.integers(1, 5))
        assert mutate_seed(mutate_seed(seed, k, cache), k, cache) == seed


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "A5", "D4", "D5", "E6", "B3", "G2"])
def test_coxeter_period(name):
    """Coxeter mutation has order (h+2)/2 for even h and h+2 for odd h."""
    t = DynkinType.parse(name)
    orbit = coxeter_orbit(dynkin_seed(t), 100)
    assert orbit.periodic
    assert orbit.period == expected_coxeter_period(t)


def test_expected_periods():
    """Coxeter periods are (h+2)/2 for even h and h+2 for odd h."""
    expected = {"A3": 3, "D4": 4, "A5": 4, "D5": 5, "E6": 7, "A2": 5, "A4": 7}
    for name, period in expected.items():
        assert expected_coxeter_period(DynkinType.parse(name)) == period


@pytest.mark.parametrize("params", [(3, 3, 3), (2, 3, 6), (2, 4, 4)])
def test_coxeter_orbit_of_infinite_type(params):
    """Six Coxeter steps of an infinite tripod give six distinct clusters, well within 30 seconds."""
    start = time.perf_counter()
    seed = modular_seed(tripod_quiver(*params).matrix, np.random.default_rng(0))
    orbit = coxeter_orbit(seed, 6)
    assert not orbit.periodic
    assert orbit.period is None
    assert len({s.key for s in orbit.seeds}) == 6
    assert time.perf_counter() - start < 30


def test_residues_follow_exact_mutation():
    """Residues after Coxeter steps are the exact cluster variables evaluated mod the prime."""
    seed = dynkin_seed(DynkinType("A", 3))
    residues = modular_seed(seed.matrix, np.random.default_rng(7), points=1)
    point = [Fraction(v[0]) for v in residues.values]
    exact = coxeter_power(seed, 2)
    moved = coxeter_power(residues, 2)
    assert isinstance(moved, ModularSeed)
    p = FINGERPRINT_PRIME
    for variable, (residue,) in zip(exact.variables, moved.values):
        value = variable.evaluate(point)
        assert value.numerator * pow(value.denominator, -1, p) % p == residue


@pytest.mark.parametrize("name", ["A3", "D4", "E6"])
def test_residue_orbit_closes_with_the_exact_period(name):
    """Residue keys recur exactly when the clusters do."""
    t = DynkinType.parse(name)
    orbit = coxeter_orbit(modular_seed(dynkin_matrix(t), np.random.default_rng(1)), 100)
    assert orbit.period == expected_coxeter_period(t)


def test_vanishing_residue_is_degenerate():
    """A variable that vanishes mod the prime cannot be exchanged."""
    seed = ModularSeed(((0,), (5,)), linear_quiver(2).matrix)
    with pytest.raises(DegenerateValue):
        mutate_modular(seed, 1)


def test_walk_fills_a_shared_empty_cache():
    """An empty cache handed to a walk is the one that gets filled."""
    cache = ExchangeCache()
    normal_form_walk(dynkin_seed(DynkinType("A", 3)), 2, [1, 2], cache)
    assert len(cache) > 3
    assert cache.divisions > 0


def test_a3_facet_table():
    """Facets of the initial variables under Coxeter mutation in type A3."""
    table = facet_orbit_table(DynkinType("A", 3))
    expected = {
        (0, 1): (-1, 0, 0), (0, 2): (0, -1, 0), (0, 3): (0, 0, -1),
        (1, 1): (1, 1, 0), (1, 2): (0, 1, 0), (1, 3): (0, 1, 1),
        (2, 1): (0, 0, 1), (2, 2): (1, 1, 1), (2, 3): (1, 0, 0),
    }
    assert {key: root.coords for key, root in table.items()} == expected


def test_facet_table_needs_even_coxeter_number():
    """A2 has h = 3."""
    with pytest.raises(OddCoxeterNumber):
        facet_orbit_table(DynkinType("A", 2))


def test_coxeter_power_on_y_seeds():
    """Labeled y-seeds of type A3 return after h + 2 Coxeter steps."""
    rng = np.random.default_rng(11)
    yseed = random_y_seed(dynkin_matrix(DynkinType("A", 3)), rng)
    assert coxeter_power(yseed, 6) == yseed
    assert coxeter_power(yseed, 1) != yseed


def test_detect_finite_type():
    """An oriented 3-cycle is mutation equivalent to A3; the Kronecker quiver is infinite."""
    cyclic = Quiver.from_arrows(3, [(1, 2), (2, 3), (3, 1)])
    assert detect_finite_type(cyclic.matrix, 100) == [DynkinType("A", 3)]
    assert detect_finite_type(ExchangeMatrix.of([[0, 2], [-2, 0]]), 100) is None


class TestCachedEnumeration(unittest.TestCase):
    """Test enumeration through the on-disk cache of the verifier."""

    def setUp(self):
        """Set up a temporary cache directory."""
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up the cache directory."""
        shutil.rmtree(self.test_dir)

    def test_summary_is_cached(self):
        """Test that a second verifier reads the stored summary."""
        from weavekit.core import RunConfig, Verifier

        config = RunConfig(cache_dir=Path(self.test_dir))
        first = Verifier(config).enumeration_summary(DynkinType("A", 3))
        self.assertEqual(first["seeds"], 14)
        self.assertEqual(len(list(Path(self.test_dir).glob("*.json"))), 1)
        second = Verifier(config).enumeration_summary(DynkinType("A", 3))
        self.assertEqual(first, second)
