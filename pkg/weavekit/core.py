"""Core verification API shared by the CLI and Python callers.

Library code raises :class:`WeaveError`; this module runs the acceptance
suites and turns every outcome into a :class:`CheckResult`.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .clusterkit import (
    ExchangeCache,
    LaurentPoly,
    coxeter_mutation,
    coxeter_orbit,
    denominator_vector,
    dynkin_matrix,
    dynkin_seed,
    enumerate_exchange_graph,
    expected_coxeter_period,
    facet_orbit_table,
    linear_quiver,
    modular_seed,
    mutate_seed,
    tripod_quiver,
)
from .flagkit import check_equivariance, cross_ratio, extract_seed, generic_boundary_flags, random_gl, solve_face_flags
from .foldkit import check_globally_foldable, enumerate_folded_pattern, fold_matrix, standard_folding
from .ngraphkit import (
    build_linear,
    build_tripod,
    canonical_form,
    intersection_matrix,
    legendrian_coxeter_mutation,
    quiver_of,
    rotate,
    tripod_stack,
)
from .rootdata import DynkinType, almost_positive_roots, cluster_variable_count, seed_count
from .utils.cache import CACHE_ENV, EnumerationCache
from .utils.errors import ConfigurationError, WeaveError
from .utils.result import EXIT_CODES, CheckResult, ErrorCategory, ResultType

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json", "dot", "svg", "png")
SUITES = ("tables", "coxeter", "folding", "ngraph", "equivariance")

TABLE_TYPES = ("A1", "A2", "A3", "A4", "D4", "E6")
LONG_TABLE_TYPES = ("E7", "E8")
FOLDED_TYPES = ("B2", "B3", "C3", "G2", "F4")
VARIABLE_TYPES = ("A1", "A2", "A3", "A4", "A5", "D4", "E6")
COXETER_TYPES = ("A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "C3", "D4", "D5", "D6", "E6", "G2", "F4")
INFINITE_TRIPODS = ((3, 3, 3), (2, 3, 6))
EQUIVARIANCE_FAMILIES = (("linear", (1,)), ("linear", (2,)), ("linear", (3,)),
                         ("tripod", (1, 1, 1)), ("tripod", (2, 2, 2)))
EQUIVARIANCE_SEEDS = 5
PROPERTY_SAMPLES = 100
INVOLUTION_SAMPLES = 1_000
INVOLUTION_TYPES = ("A1", "A3", "A4", "B3", "C3", "D4", "G2")

# facet mu_Q^r(F_{-alpha_i}) in type A3, as almost positive roots
A3_FACET_TABLE = {
    (0, 1): (-1, 0, 0), (0, 2): (0, -1, 0), (0, 3): (0, 0, -1),
    (1, 1): (1, 1, 0), (1, 2): (0, 1, 0), (1, 3): (0, 1, 1),
    (2, 1): (0, 0, 1), (2, 2): (1, 1, 1), (2, 3): (1, 0, 0),
}
D4_TO_G2 = ((0, 1), (-3, 0))


@dataclass
class RunConfig:
    """Settings shared by every command; the seed makes random draws reproducible."""

    seed: int = 0
    cap: int = 100_000
    long_tests: bool = False
    output_format: str = "text"
    finite_type_cap: int = 2_000
    cache_dir: Optional[Path] = None

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Defaults, then ``WEAVE_CACHE_DIR``, then explicit overrides (None values ignored)."""
        config = cls()
        cache_dir = os.environ.get(CACHE_ENV)
        if cache_dir:
            config.cache_dir = Path(cache_dir)
        for name, value in overrides.items():
            if value is not None:
                setattr(config, name, value)
        return config

    def validate(self) -> None:
        if self.cap < 1:
            raise ConfigurationError(f"cap must be at least 1, got {self.cap}")
        if self.finite_type_cap < 1:
            raise ConfigurationError(f"finite_type_cap must be at least 1, got {self.finite_type_cap}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"Unknown output format {self.output_format!r}",
                                     fix_hint=f"Use one of: {', '.join(OUTPUT_FORMATS)}")

    def rng(self, offset: int = 0) -> np.random.Generator:
        return np.random.default_rng(self.seed + offset)

    def cache(self) -> EnumerationCache:
        return EnumerationCache(self.cache_dir)


@dataclass
class VerifyCallbacks:
    """Optional callbacks invoked while suites run."""

    on_suite_start: Optional[Callable[[str], None]] = None
    on_result: Optional[Callable[[CheckResult], None]] = None
    on_done: Optional[Callable[["VerifySummary"], None]] = None


@dataclass
class VerifySummary:
    """Aggregate summary for a verification run."""

    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0
    exit_code: int = 0
    categories: Dict[ErrorCategory, int] = field(default_factory=dict)

    def add(self, result: CheckResult) -> None:
        self.total += 1
        if result.result_type == ResultType.PASS:
            self.passed += 1
        elif result.result_type == ResultType.SKIP:
            self.skipped += 1
        elif result.result_type == ResultType.FAIL:
            self.failed += 1
        else:
            self.errors += 1
            category = result.error_category or ErrorCategory.INTERNAL_ERROR
            self.categories[category] = self.categories.get(category, 0) + 1
        # a verification failure outranks every error
        if result.result_type == ResultType.FAIL:
            self.exit_code = result.exit_code
        elif self.exit_code == 0:
            self.exit_code = result.exit_code


def error_result(suite: str, name: str, exc: Exception) -> CheckResult:
    """Turn an exception into an ERROR result carrying its category and fix hint."""
    if isinstance(exc, WeaveError):
        return CheckResult(ResultType.ERROR, suite, name, error=f"{type(exc).__name__}: {exc}",
                           error_category=exc.category, fix_hint=exc.fix_hint)
    return CheckResult(ResultType.ERROR, suite, name, error=f"{type(exc).__name__}: {exc}",
                       error_category=ErrorCategory.INTERNAL_ERROR)


def compare(suite: str, name: str, expected, actual) -> CheckResult:
    if expected == actual:
        return CheckResult(ResultType.PASS, suite, name, actual=str(actual))
    return CheckResult(ResultType.FAIL, suite, name, expected=str(expected), actual=str(actual))


Check = Tuple[str, Callable[[], CheckResult]]


class Verifier:
    """Runs the acceptance suites and collects their results."""

    def __init__(self, config: Optional[RunConfig] = None) -> None:
        self.config = config or RunConfig()
        self.config.validate()
        self.cache = self.config.cache()

    def run(self, suite: str = "all", callbacks: Optional[VerifyCallbacks] = None
            ) -> Tuple[List[CheckResult], VerifySummary]:
        callbacks = callbacks or VerifyCallbacks()
        if suite != "all" and suite not in SUITES:
            raise ConfigurationError(f"Unknown suite {suite!r}", fix_hint=f"Use one of: all, {', '.join(SUITES)}")
        names = SUITES if suite == "all" else (suite,)
        results: List[CheckResult] = []
        summary = VerifySummary()
        for name in names:
            if callbacks.on_suite_start:
                callbacks.on_suite_start(name)
            logger.info("Running suite %s", name)
            for check_name, check in getattr(self, f"_{name}_checks")():
                try:
                    result = check()
                except Exception as exc:  # every failure becomes a result
                    logger.debug("Check %s/%s raised", name, check_name, exc_info=True)
                    result = error_result(name, check_name, exc)
                results.append(result)
                summary.add(result)
                if callbacks.on_result:
                    callbacks.on_result(result)
        if callbacks.on_done:
            callbacks.on_done(summary)
        return results, summary

    # enumeration -----------------------------------------------------------

    def enumeration_summary(self, t: DynkinType) -> Dict[str, int]:
        """Seed and cluster-variable counts of the exchange graph of type t, cached when enabled."""
        key = {"kind": "exchange_graph", "type": str(t), "cap": self.config.cap}
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        graph = enumerate_exchange_graph(dynkin_seed(t), self.config.cap)
        value = {
            "seeds": len(graph.vertices),
            "variables": len(graph.cluster_variables()),
            "regular": int(graph.is_regular()),
            "connected": int(graph.is_connected()),
        }
        self.cache.put(key, value)
        return value

    def folded_count(self, t: DynkinType) -> int:
        key = {"kind": "folded_pattern", "type": str(t), "cap": self.config.cap}
        cached = self.cache.get(key)
        if cached is not None:
            return cached["seeds"]
        folding = standard_folding(t)
        psi = [Fraction(p) for p in (2, 3, 5, 7, 11, 13)[: len(folding.orbits)]]
        pattern = enumerate_folded_pattern(dynkin_seed(folding.unfolded), folding.action, psi,
                                           self.config.cap, folding.orbits)
        self.cache.put(key, {"seeds": len(pattern.vertices)})
        return len(pattern.vertices)

    # suites -------------------------------------------------------------------

    def _tables_checks(self) -> Iterator[Check]:
        types = TABLE_TYPES + (LONG_TABLE_TYPES if self.config.long_tests else ())
        for name in types:
            t = DynkinType.parse(name)
            yield f"seeds-{name}", lambda t=t: compare(
                "tables", f"seeds-{t}", seed_count(t), self.enumeration_summary(t)["seeds"])
        for name in VARIABLE_TYPES:
            t = DynkinType.parse(name)
            yield f"variables-{name}", lambda t=t: compare(
                "tables", f"variables-{t}", cluster_variable_count(t), self.enumeration_summary(t)["variables"])
        for name in TABLE_TYPES:
            t = DynkinType.parse(name)
            yield f"regular-{name}", lambda t=t: compare(
                "tables", f"regular-{t}", (1, 1),
                (self.enumeration_summary(t)["regular"], self.enumeration_summary(t)["connected"]))
        for name in FOLDED_TYPES:
            t = DynkinType.parse(name)
            yield f"folded-seeds-{name}", lambda t=t: compare(
                "tables", f"folded-seeds-{t}", seed_count(t), self.folded_count(t))
        yield "a2-variables", self._a2_variables
        yield "a2-denominators", self._a2_denominators
        yield "mutation-involution", self._mutation_involution

    def _a2_variables(self) -> CheckResult:
        terms = [
            [((1, 0), 1)],
            [((0, 1), 1)],
            [((-1, 0), 1), ((-1, 1), 1)],
            [((0, -1), 1), ((1, -1), 1)],
            [((-1, -1), 1), ((0, -1), 1), ((-1, 0), 1)],
        ]
        expected = sorted(LaurentPoly.from_terms(2, t).serialize() for t in terms)
        graph = enumerate_exchange_graph(dynkin_seed(DynkinType("A", 2)), self.config.cap)
        actual = sorted(v.serialize() for v in graph.cluster_variables())
        return compare("tables", "a2-variables", expected, actual)

    def _a2_denominators(self) -> CheckResult:
        t = DynkinType("A", 2)
        graph = enumerate_exchange_graph(dynkin_seed(t), self.config.cap)
        actual = sorted(denominator_vector(v, 2).coords for v in graph.cluster_variables())
        expected = sorted(r.coords for r in almost_positive_roots(t))
        return compare("tables", "a2-denominators", expected, actual)

    def _mutation_involution(self) -> CheckResult:
        rng = self.config.rng()
        seeds = {name: dynkin_seed(DynkinType.parse(name)) for name in INVOLUTION_TYPES}
        caches = {name: ExchangeCache() for name in INVOLUTION_TYPES}
        broken = 0
        for _ in range(INVOLUTION_SAMPLES):
            name = INVOLUTION_TYPES[int(rng.integers(len(INVOLUTION_TYPES)))]
            seed, cache = seeds[name], caches[name]
            for _ in range(int(rng.integers(0, 6))):
                seed = mutate_seed(seed, int(rng.integers(1, seed.n + 1)), cache)
            k = int(rng.integers(1, seed.n + 1))
            if mutate_seed(mutate_seed(seed, k, cache), k, cache) != seed:
                broken += 1
        return compare("tables", "mutation-involution", 0, broken)

    def _coxeter_checks(self) -> Iterator[Check]:
        for name in COXETER_TYPES:
            t = DynkinType.parse(name)
            yield f"period-{name}", lambda t=t: compare(
                "coxeter", f"period-{t}", expected_coxeter_period(t),
                coxeter_orbit(dynkin_seed(t), self.config.cap).period)
        yield "facets-A3", self._a3_facets
        for a, b, c in INFINITE_TRIPODS:
            yield f"infinite-{a}{b}{c}", lambda p=(a, b, c): self._distinct_orbit(*p)

    def _a3_facets(self) -> CheckResult:
        table = facet_orbit_table(DynkinType("A", 3))
        actual = {key: root.coords for key, root in table.items()}
        return compare("coxeter", "facets-A3", A3_FACET_TABLE, actual)

    def _distinct_orbit(self, a: int, b: int, c: int) -> CheckResult:
        orbit = coxeter_orbit(modular_seed(tripod_quiver(a, b, c).matrix, self.config.rng()), 6)
        distinct = len({seed.key for seed in orbit.seeds})
        return compare("coxeter", f"infinite-{a}{b}{c}", (6, False), (distinct, orbit.periodic))

    def _folding_checks(self) -> Iterator[Check]:
        yield "d4-g2-matrix", self._d4_to_g2
        for name in ("B3", "C3", "F4", "G2"):
            t = DynkinType.parse(name)
            yield f"foldable-{name}", lambda t=t: self._foldable(t)

    def _d4_to_g2(self) -> CheckResult:
        folding = standard_folding(DynkinType("G", 2))
        folded = fold_matrix(dynkin_matrix(folding.unfolded), folding.action, folding.orbits)
        return compare("folding", "d4-g2-matrix", D4_TO_G2, folded.entries)

    def _foldable(self, t: DynkinType) -> CheckResult:
        folding = standard_folding(t)
        ok = check_globally_foldable(dynkin_matrix(folding.unfolded), folding.action, self.config.cap)
        return compare("folding", f"foldable-{folding.name}", True, ok)

    def _ngraph_checks(self) -> Iterator[Check]:
        bound = 4 if self.config.long_tests else 3
        for a in range(1, bound + 1):
            for b in range(a, bound + 1):
                for c in range(b, bound + 1):
                    yield f"quiver-tripod-{a}{b}{c}", lambda p=(a, b, c): compare(
                        "ngraph", "quiver-tripod-%d%d%d" % p, tripod_quiver(*p), quiver_of(*build_tripod(*p)))
        for n in range(1, 8):
            yield f"quiver-linear-{n}", lambda n=n: compare(
                "ngraph", f"quiver-linear-{n}", linear_quiver(n), quiver_of(*build_linear(n)))
        for n in range(1, 7):
            yield f"coxeter-rotation-{n}", lambda n=n: self._linear_rotation(n)
        for a in range(1, 4):
            for b in range(a, 4):
                for c in range(b, 4):
                    yield f"padding-{a}{b}{c}", lambda p=(a, b, c): self._padding_quiver(*p)
        yield "intersection-antisymmetry", self._antisymmetry

    def _linear_rotation(self, n: int) -> CheckResult:
        g, cycles = build_linear(n)
        mutated, _ = legendrian_coxeter_mutation(g, cycles)
        form = canonical_form(mutated)
        turned = any(canonical_form(rotate(g, steps)) == form for steps in (1, -1))
        return compare("ngraph", f"coxeter-rotation-{n}", True, turned)

    def _padding_quiver(self, a: int, b: int, c: int) -> CheckResult:
        stack, cycles = tripod_stack(a, b, c, 1)
        expected = coxeter_mutation(tripod_quiver(a, b, c))
        return compare("ngraph", f"padding-{a}{b}{c}", expected, quiver_of(stack, cycles))

    def _antisymmetry(self) -> CheckResult:
        graphs = [build_linear(n) for n in range(1, 8)]
        graphs += [build_tripod(a, b, c) for a, b, c in ((1, 1, 1), (1, 2, 3), (2, 2, 2), (2, 3, 4), (3, 3, 3))]
        broken = []
        for g, cycles in graphs:
            matrix = intersection_matrix(g, cycles)
            if any(matrix[i][j] != -matrix[j][i] for i in range(len(matrix)) for j in range(len(matrix))):
                broken.append(str(g.family))
        return compare("ngraph", "intersection-antisymmetry", [], broken)

    def _equivariance_checks(self) -> Iterator[Check]:
        for family, params in EQUIVARIANCE_FAMILIES:
            g, cycles = (build_linear if family == "linear" else build_tripod)(*params)
            label = family + "-" + "".join(str(p) for p in params)
            for offset in range(EQUIVARIANCE_SEEDS):
                for spec in cycles:
                    yield f"{label}-seed{offset}-cycle{spec.label}", (
                        lambda g=g, cycles=cycles, k=spec.label, offset=offset, label=label:
                        self._equivariant(g, cycles, k, offset, label))
        yield "gl-invariance", self._gl_invariance
        yield "cross-ratio-inversion", self._cross_ratio_inversion

    def _equivariant(self, g, cycles, k: int, offset: int, label: str) -> CheckResult:
        bf = generic_boundary_flags(g.boundary_word(), self.config.rng(offset), g)
        return compare("equivariance", f"{label}-seed{offset}-cycle{k}", True, check_equivariance(g, cycles, bf, k))

    def _gl_invariance(self) -> CheckResult:
        rng = self.config.rng()
        broken = 0
        for index in range(PROPERTY_SAMPLES):
            family, params = EQUIVARIANCE_FAMILIES[index % len(EQUIVARIANCE_FAMILIES)]
            g, cycles = (build_linear if family == "linear" else build_tripod)(*params)
            fa = solve_face_flags(g, generic_boundary_flags(g.boundary_word(), rng, g))
            moved = fa.transformed(random_gl(rng, g.N))
            if extract_seed(g, cycles, fa).values != extract_seed(g, cycles, moved).values:
                broken += 1
        return compare("equivariance", "gl-invariance", 0, broken)

    def _cross_ratio_inversion(self) -> CheckResult:
        rng = self.config.rng()
        broken = 0
        checked = 0
        while checked < PROPERTY_SAMPLES:
            v = [tuple(int(x) for x in rng.integers(-9, 10, size=2)) for _ in range(4)]
            try:
                value = cross_ratio(*v)
                shifted = cross_ratio(v[1], v[2], v[3], v[0])
            except WeaveError:
                continue
            checked += 1
            if shifted != 1 / value:
                broken += 1
        return compare("equivariance", "cross-ratio-inversion", 0, broken)


def run_suite(suite: str = "all", config: Optional[RunConfig] = None,
              callbacks: Optional[VerifyCallbacks] = None) -> Tuple[List[CheckResult], VerifySummary]:
    """Convenience function to run a suite with a fresh verifier."""
    return Verifier(config).run(suite, callbacks)


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, WeaveError):
        return exc.exit_code
    return EXIT_CODES[ErrorCategory.INTERNAL_ERROR]
