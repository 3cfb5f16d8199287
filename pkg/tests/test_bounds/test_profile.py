"""Tests for sketches, the profile and Major-Profile."""

import math

import numpy as np
import pytest

from mec.bench.generators import gen_dirichlet, gen_fib_lucas
from mec.bounds.meet import majorization_meet, majorizes
from mec.bounds.profile import (
    major_profile,
    profile_cost,
    profile_curve,
    profile_entropy,
    profile_transpose_entropy,
    profile_value,
    sketch_points,
)
from mec.core.entropy import entropy
from mec.core.models import EPS, CostFn, Dist, InstanceSet


class TestProfileCurve:
    """Test suite for the profile curve."""

    def test_w_breakpoints(self, w_instance):
        pc = profile_curve(w_instance)
        assert pc.xs == pytest.approx((0.0, 0.1, 0.4, 0.5, 1.0))
        assert pc.ys == pytest.approx((0.0, 0.1, 0.2, 0.4, 0.5))
        assert pc.mass == pytest.approx(1.0)

    def test_w_step_values(self, w_instance):
        pc = profile_curve(w_instance)
        assert profile_value(pc, 0.05) == pytest.approx(0.1)
        assert profile_value(pc, 0.3) == pytest.approx(0.2)
        assert profile_value(pc, 0.45) == pytest.approx(0.4)
        assert profile_value(pc, 0.7) == pytest.approx(0.5)
        assert profile_value(pc, 0.0) == 0.0

    def test_w_entropy(self, w_instance):
        pc = profile_curve(w_instance)
        expected = 0.1 * math.log2(10) + 0.3 * math.log2(5) + 0.1 * math.log2(2.5) + 0.5
        assert profile_entropy(pc) == pytest.approx(expected, abs=1e-12)
        assert profile_entropy(pc) == pytest.approx(1.660964, abs=1e-6)

    def test_transpose_view_agrees(self, w_instance, meet_over_profile):
        for s in (w_instance, meet_over_profile, gen_dirichlet(7, 3, seed=5)):
            pc = profile_curve(s)
            assert profile_transpose_entropy(pc) == pytest.approx(profile_entropy(pc), abs=1e-9)

    def test_single_sketch_is_entropy(self):
        d = Dist.from_masses([0.4, 0.3, 0.2, 0.1])
        assert profile_entropy(sketch_points(d)) == pytest.approx(entropy(d), abs=1e-12)

    def test_profile_can_fall_below_meet(self, meet_over_profile):
        pc = profile_curve(meet_over_profile)
        assert profile_entropy(pc) == pytest.approx(0.25 * math.log2(20) + 0.75, abs=1e-9)
        assert profile_entropy(pc) < entropy(majorization_meet(meet_over_profile))

    def test_single_uniform_dominates(self):
        s = gen_fib_lucas(3)
        assert profile_entropy(profile_curve(s)) == pytest.approx(math.log2(3), abs=1e-12)

    def test_partial_instance(self):
        s = InstanceSet.from_lists([[0.3, 0.2], [0.25, 0.25]])
        pc = profile_curve(s)
        assert pc.mass == pytest.approx(0.5)
        expected = 0.2 * math.log2(5) + 0.3 * 2.0
        assert profile_entropy(pc) == pytest.approx(expected, abs=1e-12)


class TestMajorProfile:
    """Test suite for Major-Profile."""

    def test_w(self, w_instance):
        d = major_profile(profile_curve(w_instance))
        assert d.masses == pytest.approx((0.5, 0.2, 0.2, 0.1))

    def test_remark(self, meet_over_profile):
        d = major_profile(profile_curve(meet_over_profile))
        assert d.masses == pytest.approx((0.5, 0.25) + (0.05,) * 5)
        assert entropy(d) == pytest.approx(2.08048, abs=1e-5)

    def test_sketch_under_profile(self):
        for seed in range(20):
            s = gen_dirichlet(6, 3, seed=seed)
            pc = profile_curve(s)
            sketch = sketch_points(major_profile(pc))
            cuts = np.unique(np.concatenate((pc.x_array, sketch.x_array)))
            for lo, hi in zip(cuts, cuts[1:], strict=False):
                if hi - lo < 1e-9:
                    continue
                x = float(lo + hi) / 2
                assert profile_value(sketch, x) <= profile_value(pc, x) + EPS

    def test_meet_majorizes_major_profile(self):
        for seed in range(20):
            s = gen_dirichlet(5, 2, seed=seed)
            major = major_profile(profile_curve(s))
            assert majorizes(majorization_meet(s).array, major.array)

    def test_mass_preserved(self):
        s = gen_dirichlet(8, 4, seed=3)
        assert major_profile(profile_curve(s)).total == pytest.approx(1.0, abs=1e-9)


class TestProfileCost:
    """Test suite for the concave-cost profile bound."""

    def test_shannon_matches_entropy(self, w_instance):
        pc = profile_curve(w_instance)
        assert profile_cost(pc, CostFn.shannon()) == pytest.approx(profile_entropy(pc))

    def test_power_on_single_sketch(self):
        d = Dist.from_masses([0.25] * 4)
        assert profile_cost(sketch_points(d), CostFn.power(0.5)) == pytest.approx(2.0)

    def test_power_on_w(self, w_instance):
        pc = profile_curve(w_instance)
        expected = np.sum(np.diff(pc.x_array) * np.power(pc.y_array[1:], -0.5))
        assert profile_cost(pc, CostFn.power(0.5)) == pytest.approx(float(expected))
