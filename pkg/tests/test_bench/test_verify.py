"""Tests for the verification sweep."""

import pytest

from mec.bench.verify import (
    CheckResult,
    VerifyCounts,
    VerifyReport,
    check_bounds,
    check_corruption,
    check_greedy,
    check_point_values,
    verify_suite,
)
from mec.core.models import InstanceSet
from mec.utils.errors import InvariantError

SMALL = VerifyCounts(greedy=10, bounds=10, exact=3, exact_max_n=4, guarantees=10, concave=3)


class TestChecks:
    """Individual checks on small seeded batches."""

    def test_greedy(self):
        result = check_greedy(0, SMALL)
        assert result.cases == 10
        assert result.passed, result.failures

    def test_bounds(self):
        result = check_bounds(1, SMALL)
        assert result.passed, result.failures

    def test_point_values(self):
        result = check_point_values(0, SMALL)
        assert result.passed, result.failures

    def test_corruption_detected(self):
        result = check_corruption(0, SMALL)
        assert result.cases >= 1
        assert result.passed

    def test_failure_carries_instance(self):
        result = CheckResult("demo")
        result.fail("bad", InstanceSet.from_lists([[0.5, 0.5]]))
        assert not result.passed
        assert result.failures == ["bad on [0.500000, 0.500000]"]


class TestVerifySuite:
    """Whole sweep."""

    def test_failed_checks_raise(self):
        bad = CheckResult("greedy", cases=3, failures=["x", "y"])
        report = VerifyReport([bad, CheckResult("bounds", cases=2)])
        with pytest.raises(InvariantError, match="2 failures in greedy"):
            report.raise_for_failures()
        VerifyReport([CheckResult("bounds", cases=2)]).raise_for_failures()

    @pytest.mark.slow
    def test_passes(self):
        report = verify_suite(seed=0, counts=SMALL, inject_corruption=True, workers=1)
        assert report.ok, [c.failures for c in report.checks]
        assert report.failures == 0
        assert report.checks[-1].name == "corruption-detected"

    @pytest.mark.slow
    def test_workers_match_serial(self):
        serial = verify_suite(seed=4, counts=SMALL, workers=1)
        parallel = verify_suite(seed=4, counts=SMALL, workers=2)
        assert [(c.name, c.cases) for c in serial.checks] == [
            (c.name, c.cases) for c in parallel.checks
        ]
