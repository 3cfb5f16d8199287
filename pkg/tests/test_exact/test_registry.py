"""Tests for the solver registry."""

import pytest

from mec.core.models import CostFn, InstanceSet
from mec.exact.registry import SolverRegistry, get_registry
from mec.utils.errors import InvalidInputError, UnsupportedError


class TestSolverRegistry:
    """Test suite for SolverRegistry."""

    def test_default_solvers(self):
        names = get_registry().list_names()
        assert set(names) == {
            "enum",
            "dp",
            "backtrack-zero",
            "backtrack-meet",
            "backtrack-profile",
            "backtrack-major-profile",
        }

    @pytest.mark.parametrize(
        ("alias", "name"),
        [("backtrack", "backtrack-major-profile"), ("Enumeration", "enum"), ("DP", "dp")],
    )
    def test_aliases(self, alias, name):
        assert get_registry().get(alias).name == name

    @pytest.mark.parametrize(
        ("name", "bound", "expected"),
        [
            ("backtrack", None, "backtrack-major-profile"),
            ("backtrack", "MajorProfile", "backtrack-major-profile"),
            ("backtracking", "meet", "backtrack-meet"),
            ("backtrack-profile", "PROFILE", "backtrack-profile"),
            ("dp", None, "dp"),
        ],
    )
    def test_resolve_bound(self, name, bound, expected):
        assert get_registry().resolve(name, bound) == expected

    @pytest.mark.parametrize(
        ("name", "bound", "message"),
        [
            ("dp", "meet", "only to backtrack"),
            ("enum", "zero", "only to backtrack"),
            ("backtrack-zero", "meet", "conflicts"),
            ("backtrack", "simplex", "unknown bound"),
        ],
    )
    def test_resolve_rejects(self, name, bound, message):
        with pytest.raises(InvalidInputError, match=message):
            get_registry().resolve(name, bound)

    def test_unknown(self):
        with pytest.raises(InvalidInputError, match="unknown solver"):
            get_registry().get("simplex")

    def test_solve(self, w_instance):
        result = get_registry().solve("backtrack", w_instance)
        assert result.solver == "backtrack-major-profile"
        assert result.found

    def test_three_distributions_unsupported(self):
        s = InstanceSet.from_lists([[1.0], [1.0], [1.0]])
        with pytest.raises(UnsupportedError):
            get_registry().solve("dp", s)

    def test_backtrack_is_entropy_only(self, w_instance):
        with pytest.raises(UnsupportedError):
            get_registry().solve("backtrack", w_instance, cost=CostFn.power(0.5))

    def test_empty_registry(self):
        registry = SolverRegistry()
        assert registry.list_solvers() == []
        assert repr(get_registry().get("dp")) == "<Solver: dp>"
