"""Tests for results, errors, serialization, caching and output files."""

import json
import shutil
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from weavekit.clusterkit import ExchangeMatrix, YSeedNumeric, dynkin_seed
from weavekit.ngraphkit import build_tripod, canonical_form
from weavekit.rootdata import DynkinType
from weavekit.utils.cache import CACHE_ENV, EnumerationCache, canonical_sha256
from weavekit.utils.errors import CapExceeded, InputError, InteriorFace, NotRaySymmetric, WeaveError
from weavekit.utils.file_utils import OutputManager, atomic_write
from weavekit.utils.result import CheckResult, ErrorCategory, ResultType
from weavekit.utils.serialization import decode, dumps, encode, encode_ngraph, loads


class TestCheckResult(unittest.TestCase):
    """Test result lines and exit codes."""

    def test_pass_line(self):
        """Test the line printed for a passing check."""
        result = CheckResult(ResultType.PASS, "tables", "seeds-A3", expected="14", actual="14")
        self.assertEqual(result.format_line(), "PASS | tables/seeds-A3 | 14")
        self.assertEqual(result.exit_code, 0)

    def test_fail_line(self):
        """Test that a failed comparison shows both values and exits with 2."""
        result = CheckResult(ResultType.FAIL, "coxeter", "period-A2", expected="5", actual="4")
        self.assertEqual(result.format_line(), "FAIL | coxeter/period-A2 | expected 5, got 4")
        self.assertEqual(result.exit_code, 2)

    def test_error_line(self):
        """Test that errors carry their category and fix hint."""
        result = CheckResult(ResultType.ERROR, "tables", "seeds-E8", error="cap reached",
                             error_category=ErrorCategory.CAP_EXCEEDED, fix_hint="Raise --cap")
        self.assertIn("\n  Fix: Raise --cap", result.format_line())
        self.assertEqual(result.exit_code, 4)


class TestErrors(unittest.TestCase):
    """Test the error hierarchy."""

    def test_categories_pick_exit_codes(self):
        """Test that each family of errors maps to its exit code."""
        self.assertEqual(InputError("bad").exit_code, 1)
        self.assertEqual(InteriorFace("hidden face").exit_code, 3)
        self.assertEqual(CapExceeded("too many").exit_code, 4)
        self.assertEqual(WeaveError("bug").exit_code, 1)

    def test_fix_hint_override(self):
        """Test that an explicit fix hint replaces the class default."""
        self.assertEqual(NotRaySymmetric("no").fix_hint, InputError.fix_hint)
        self.assertEqual(InputError("bad", fix_hint="Try A3").fix_hint, "Try A3")


class TestSerialization(unittest.TestCase):
    """Test tagged JSON values."""

    def test_tagged_form(self):
        """Test that encoded values name their type."""
        payload = encode(DynkinType("E", 6))
        self.assertEqual(payload["type"], "dynkin_type")
        self.assertEqual(decode(payload), DynkinType("E", 6))

    def test_rationals_travel_as_strings(self):
        """Test that y-values are written as p/q strings."""
        yseed = YSeedNumeric.of([Fraction(3, 4), 2], ExchangeMatrix.of([[0, 1], [-1, 0]]))
        text = dumps(yseed)
        self.assertIn('"3/4"', text)
        self.assertEqual(loads(text), yseed)

    def test_seed(self):
        """Test that a seed with Laurent variables comes back with the same variables."""
        seed = dynkin_seed(DynkinType("A", 3))
        self.assertTrue(loads(dumps(seed)).same_as(seed))

    def test_ngraph(self):
        """Test that N-graphs come back with their cycles."""
        g, cycles = build_tripod(1, 1, 1)
        loaded, loaded_cycles = decode(json.loads(json.dumps(encode_ngraph(g, cycles))))
        self.assertEqual(canonical_form(loaded, loaded_cycles), canonical_form(g, cycles))

    def test_unknown_values(self):
        """Test that unsupported values and payloads are refused."""
        with self.assertRaises(InputError):
            encode(object())
        with self.assertRaises(InputError):
            decode({"kind": "seed"})


class TestEnumerationCache(unittest.TestCase):
    """Test the on-disk summary cache."""

    def setUp(self):
        """Set up a temporary cache directory."""
        self.test_dir = tempfile.mkdtemp()
        self.cache = EnumerationCache(Path(self.test_dir) / "cache")

    def tearDown(self):
        """Clean up the temporary directory."""
        shutil.rmtree(self.test_dir)

    def test_store_and_fetch(self):
        """Test that a stored summary is found under its key."""
        key = {"type": "A3", "cap": 100}
        self.assertIsNone(self.cache.get(key))
        self.cache.put(key, {"seeds": 14})
        self.assertEqual(self.cache.get(key), {"seeds": 14})
        self.assertTrue(self.cache.path_for(key).name.startswith(canonical_sha256(key)))

    def test_key_order_does_not_matter(self):
        """Test that keys are hashed in canonical order."""
        self.assertEqual(canonical_sha256({"a": 1, "b": 2}), canonical_sha256({"b": 2, "a": 1}))

    def test_corrupt_entry_is_a_miss(self):
        """Test that an unreadable entry is ignored."""
        key = {"type": "D4"}
        self.cache.path_for(key).write_text("{not json", encoding="utf-8")
        self.assertIsNone(self.cache.get(key))

    def test_disabled_cache(self):
        """Test that a cache without a root stores nothing."""
        cache = EnumerationCache()
        cache.put({"type": "A1"}, {"seeds": 2})
        self.assertFalse(cache.enabled)
        self.assertIsNone(cache.get({"type": "A1"}))


class TestOutputManager(unittest.TestCase):
    """Test output file management."""

    def setUp(self):
        """Set up test fixtures."""
        self.test_dir = tempfile.mkdtemp()
        self.output_dir = Path(self.test_dir) / "output"

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.test_dir)

    def test_output_directory_creation(self):
        """Test that output directory is created."""
        OutputManager(self.output_dir)
        self.assertTrue(self.output_dir.is_dir())

    def test_collision_handling_no_overwrite(self):
        """Test collision handling when overwrite is disabled."""
        manager = OutputManager(self.output_dir, overwrite=False)
        existing = self.output_dir / "graph.svg"
        existing.touch()
        output_path = manager.get_output_path("graph.svg")
        self.assertEqual(output_path, self.output_dir / "graph_1.svg")

    def test_collision_handling_with_overwrite(self):
        """Test collision handling when overwrite is enabled."""
        manager = OutputManager(self.output_dir, overwrite=True)
        existing = self.output_dir / "graph.svg"
        existing.touch()
        self.assertEqual(manager.get_output_path("graph.svg"), existing)

    def test_write_json(self):
        """Test that JSON artifacts are written with sorted keys."""
        manager = OutputManager(self.output_dir)
        path = manager.write_json("summary.json", {"seeds": 14, "regular": True})
        self.assertEqual(json.loads(path.read_text(encoding="utf-8")), {"regular": True, "seeds": 14})

    def test_failed_write_leaves_nothing(self):
        """Test that a writer raising leaves neither target nor temporary file."""
        target = self.output_dir / "broken.txt"

        def writer(tmp):
            tmp.write_text("partial", encoding="utf-8")
            raise RuntimeError("boom")

        with self.assertRaises(RuntimeError):
            atomic_write(target, writer)
        self.assertFalse(target.exists())
        self.assertEqual(list(self.output_dir.iterdir()), [])


def test_cache_root_from_env(monkeypatch, tmp_path):
    """The cache root is read from the environment."""
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert EnumerationCache.from_env().root == tmp_path
    monkeypatch.delenv(CACHE_ENV)
    assert not EnumerationCache.from_env().enabled
