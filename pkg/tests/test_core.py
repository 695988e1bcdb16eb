"""Tests for the core verification API."""

from pathlib import Path
import tempfile
import shutil

import pytest

from weavekit.core import RunConfig, Verifier, VerifyCallbacks, VerifySummary, error_result, run_suite
from weavekit.rootdata import DynkinType
from weavekit.utils.cache import CACHE_ENV
from weavekit.utils.errors import CapExceeded, ConfigurationError, UnsupportedConfiguration
from weavekit.utils.result import CheckResult, ErrorCategory, ResultType


def test_run_config_from_env(monkeypatch):
    monkeypatch.setenv(CACHE_ENV, "/tmp/weave-cache")
    config = RunConfig.from_env(seed=7, cap=None)
    assert config.seed == 7
    assert config.cap == 100_000
    assert config.cache_dir == Path("/tmp/weave-cache")


def test_run_config_validation():
    with pytest.raises(ConfigurationError):
        RunConfig(cap=0).validate()
    with pytest.raises(ConfigurationError):
        RunConfig(output_format="pdf").validate()
    with pytest.raises(ConfigurationError):
        Verifier(RunConfig(finite_type_cap=0))


def test_rng_is_reproducible():
    config = RunConfig(seed=3)
    assert config.rng(1).integers(1000) == config.rng(1).integers(1000)


def test_verify_invokes_callbacks():
    events = {"suites": [], "results": 0, "done": None}

    callbacks = VerifyCallbacks(
        on_suite_start=lambda name: events["suites"].append(name),
        on_result=lambda r: events.__setitem__("results", events["results"] + 1),
        on_done=lambda s: events.__setitem__("done", s.total),
    )

    results, summary = run_suite("folding", RunConfig(), callbacks)

    assert events["suites"] == ["folding"]
    assert events["results"] == len(results) == 5
    assert events["done"] == 5
    assert summary.passed == 5
    assert summary.exit_code == 0
    assert all(r.result_type == ResultType.PASS for r in results)


def test_coxeter_suite_passes():
    results, summary = run_suite("coxeter")
    failed = [r.format_line() for r in results if r.result_type != ResultType.PASS]
    assert failed == []
    assert summary.exit_code == 0


def test_unknown_suite():
    with pytest.raises(ConfigurationError):
        Verifier().run("everything")


def _capped():
    raise CapExceeded("too many seeds")


def test_raising_check_becomes_a_result(monkeypatch):
    def broken_checks(self):
        yield "broken", lambda: 1 / 0
        yield "capped", _capped

    monkeypatch.setattr(Verifier, "_folding_checks", broken_checks)
    results, summary = Verifier().run("folding")

    assert [r.result_type for r in results] == [ResultType.ERROR, ResultType.ERROR]
    assert results[0].error_category == ErrorCategory.INTERNAL_ERROR
    assert results[1].error_category == ErrorCategory.CAP_EXCEEDED
    assert summary.errors == 2
    assert summary.exit_code == 1


def test_error_result_mapping():
    unsupported = error_result("ngraph", "x", UnsupportedConfiguration("shared edge"))
    assert unsupported.result_type == ResultType.ERROR
    assert unsupported.error_category == ErrorCategory.UNSUPPORTED
    assert unsupported.exit_code == 3
    capped = error_result("tables", "seeds-E8", CapExceeded("cap"))
    assert capped.error_category == ErrorCategory.CAP_EXCEEDED
    assert capped.fix_hint == CapExceeded.fix_hint
    internal = error_result("tables", "x", KeyError("k"))
    assert internal.error_category == ErrorCategory.INTERNAL_ERROR


def _unsupported():
    raise UnsupportedConfiguration("Cycle 1 runs inside the rewritten region")


def test_unsupported_check_exits_with_three(monkeypatch):
    def unsupported_checks(self):
        yield "fine", lambda: CheckResult(ResultType.PASS, "folding", "fine")
        yield "unsupported", _unsupported

    monkeypatch.setattr(Verifier, "_folding_checks", unsupported_checks)
    results, summary = Verifier().run("folding")

    assert [r.result_type for r in results] == [ResultType.PASS, ResultType.ERROR]
    assert results[1].error_category == ErrorCategory.UNSUPPORTED
    assert summary.skipped == 0
    assert summary.categories == {ErrorCategory.UNSUPPORTED: 1}
    assert summary.exit_code == 3


def test_failure_outranks_errors():
    summary = VerifySummary()
    summary.add(CheckResult(ResultType.ERROR, "tables", "a", error_category=ErrorCategory.CAP_EXCEEDED))
    assert summary.exit_code == 4
    summary.add(CheckResult(ResultType.FAIL, "tables", "b", expected="1", actual="2"))
    assert summary.exit_code == 2
    summary.add(CheckResult(ResultType.ERROR, "tables", "c", error_category=ErrorCategory.UNSUPPORTED))
    assert summary.exit_code == 2
    assert summary.categories == {ErrorCategory.CAP_EXCEEDED: 1, ErrorCategory.UNSUPPORTED: 1}


def test_enumeration_summary_is_cached():
    temp_dir = Path(tempfile.mkdtemp())
    try:
        config = RunConfig(cache_dir=temp_dir)
        first = Verifier(config).enumeration_summary(DynkinType("A", 3))
        assert first == {"seeds": 14, "variables": 9, "regular": 1, "connected": 1}
        assert len(list(temp_dir.glob("*.json"))) == 1
        # a fresh verifier reads the stored summary
        assert Verifier(config).enumeration_summary(DynkinType("A", 3)) == first
        assert Verifier(config).folded_count(DynkinType("B", 2)) == 6
        assert len(list(temp_dir.glob("*.json"))) == 2
    finally:
        shutil.rmtree(temp_dir)
