"""Tests for gap objectives and the fixed gap catalog."""

import pytest

from mec.bench.catalog import GAP_CATALOG, get_gap_instance
from mec.bench.objectives import evaluate_gap, parse_objective
from mec.core.models import LG_E_OVER_E
from mec.utils.errors import InvalidInputError, UnsupportedError


class TestParseObjective:
    """Splitting "a-b" objective names."""

    def test_simple(self):
        assert parse_objective("greedy-opt") == ("greedy", "opt")

    def test_hyphenated_quantity(self):
        assert parse_objective("opt-major-profile") == ("opt", "major-profile")
        assert parse_objective("major-profile-meet") == ("major-profile", "meet")

    def test_case_and_spaces(self):
        assert parse_objective("  Greedy-Meet ") == ("greedy", "meet")

    @pytest.mark.parametrize("text", ["greedy", "greedy-foo", "-opt", ""])
    def test_rejects(self, text):
        with pytest.raises(InvalidInputError):
            parse_objective(text)


class TestEvaluateGap:
    """Gaps on small instances."""

    def test_w_greedy_over_profile(self, w_instance):
        assert evaluate_gap(w_instance, "greedy-profile") == pytest.approx(0.1, abs=1e-6)

    def test_w_greedy_is_optimal(self, w_instance):
        assert evaluate_gap(w_instance, "greedy-opt") == pytest.approx(0.0, abs=1e-9)

    def test_opt_needs_two(self):
        from mec.bench.generators import gen_uniform_family

        with pytest.raises(UnsupportedError):
            evaluate_gap(gen_uniform_family(3), "opt-meet")


class TestCatalog:
    """Known gaps reproduce."""

    @pytest.mark.parametrize(
        "item", [g for g in GAP_CATALOG if g.expected is not None], ids=lambda g: g.name
    )
    def test_expected_gap(self, item):
        assert evaluate_gap(item.instance(), item.objective) == pytest.approx(
            item.expected, abs=1e-5
        )

    def test_counter_example_within_greedy_guarantee(self):
        item = get_gap_instance("counter-example")
        assert evaluate_gap(item.instance(), item.objective) <= LG_E_OVER_E + 1e-9

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            get_gap_instance("nope")
