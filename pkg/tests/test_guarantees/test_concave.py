"""Tests for the multiplicative guarantees under power costs."""

import math

import pytest

from mec.bench.generators import gen_dirichlet
from mec.core.models import CostFn, InstanceSet
from mec.guarantees.concave import (
    check_mult_guarantee,
    closed_form_ratio,
    cost_monovariant_trace,
    cost_monovariant_violations,
    guarantee_factor,
    mult_guarantee_general,
    mult_ratio_two,
    power_table,
)
from mec.utils.errors import InvalidInputError, UnsupportedError


class TestRatios:
    """Test suite for the m=2 ratio and the general factor."""

    def test_square_root(self):
        report = mult_ratio_two(CostFn.power(0.5))
        assert report.extras["r"] == pytest.approx(0.25, abs=1e-9)
        assert report.value == pytest.approx(4 / 3, abs=1e-8)
        assert report.point[0] == pytest.approx(0.25, abs=1e-5)

    @pytest.mark.parametrize("c", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
    def test_closed_form(self, c):
        report = mult_ratio_two(CostFn.power(c))
        assert report.extras["r"] == pytest.approx(closed_form_ratio(c), abs=1e-6)

    def test_shannon_unsupported(self):
        with pytest.raises(UnsupportedError):
            mult_ratio_two(CostFn.shannon())

    def test_general_factor(self):
        assert mult_guarantee_general(0.5) == pytest.approx(0.5 + math.sqrt(2), abs=1e-12)
        assert mult_guarantee_general(1.0) == pytest.approx(1.0)
        assert mult_guarantee_general(0.25) == pytest.approx(3.864, abs=1e-3)

    def test_general_factor_domain(self):
        with pytest.raises(InvalidInputError):
            mult_guarantee_general(0.0)

    def test_factor_by_m(self):
        f = CostFn.power(0.5)
        assert guarantee_factor(2, f) == pytest.approx(4 / 3, abs=1e-8)
        assert guarantee_factor(3, f) == pytest.approx(0.5 + math.sqrt(2))

    def test_power_table(self):
        report = power_table(0.5)
        assert report.extras["general"] == pytest.approx(1.914214, abs=1e-6)
        assert report.extras["closed_form_r"] == pytest.approx(0.25)


class TestMultCheck:
    """Greedy cost against the profile cost bound."""

    def test_w(self, w_instance):
        check = check_mult_guarantee(w_instance, CostFn.power(0.5))
        assert check.ok
        assert check.ratio <= 4 / 3 + 1e-9

    def test_identical_pair_is_tight(self):
        p = [0.5, 0.3, 0.2]
        for c in (0.3, 0.7):
            check = check_mult_guarantee(InstanceSet.from_lists([p, p]), CostFn.power(c))
            assert check.ratio == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("c", [0.3, 0.5, 0.7])
    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_random_instances(self, c, m):
        f = CostFn.power(c)
        for seed in range(15):
            assert check_mult_guarantee(gen_dirichlet(6, m, seed=seed), f).ok


class TestCostMonovariant:
    """Test suite for the concave-cost monovariant."""

    def test_non_increasing(self):
        f = CostFn.power(0.5)
        for seed in range(20):
            trace = cost_monovariant_trace(gen_dirichlet(5, 2, seed=seed), f)
            assert cost_monovariant_violations(trace) == []

    def test_endpoints(self, w_instance):
        f = CostFn.power(0.5)
        trace = cost_monovariant_trace(w_instance, f)
        greedy_cost = math.sqrt(0.5) + 2 * math.sqrt(0.2) + math.sqrt(0.1)
        assert trace[-1] == pytest.approx(0.75 * greedy_cost, abs=1e-9)
        assert trace[0] == pytest.approx(check_mult_guarantee(w_instance, f).bound)

    def test_violation_detected(self):
        assert cost_monovariant_violations([1.0, 1.2, 1.1]) == [1]

    def test_three_distributions_unsupported(self):
        with pytest.raises(UnsupportedError):
            cost_monovariant_trace(gen_dirichlet(3, 3, seed=0), CostFn.power(0.5))
