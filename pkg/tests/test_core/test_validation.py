"""Tests for marginal checks."""

import pytest

from mec.core.models import Coupling, InstanceSet
from mec.core.validation import support_limit, validate_coupling
from mec.utils.errors import InvalidInputError, InvariantError


@pytest.fixture
def w_coupling():
    return Coupling.from_pairs([((0, 0), 0.5), ((1, 1), 0.2), ((1, 2), 0.2), ((2, 0), 0.1)])


class TestValidateCoupling:
    """Test suite for validate_coupling."""

    def test_valid_coupling(self, w_instance, w_coupling):
        report = validate_coupling(w_instance, w_coupling)
        assert report.ok
        assert bool(report)

    def test_identity_coupling(self):
        p = [0.4, 0.3, 0.2, 0.1]
        s = InstanceSet.from_lists([p, p])
        c = Coupling.from_pairs(((i, i), mass) for i, mass in enumerate(p))
        assert validate_coupling(s, c).ok

    def test_missing_mass_reported(self, w_instance):
        c = Coupling.from_pairs([((0, 0), 0.5), ((1, 1), 0.2), ((1, 2), 0.2)])
        report = validate_coupling(w_instance, c)
        assert not report.ok
        first = {(v.k, v.i) for v in report.violations}
        assert (0, 2) in first
        assert (1, 0) in first
        missing = next(v for v in report.violations if (v.k, v.i) == (0, 2))
        assert missing.expected == pytest.approx(0.1)
        assert missing.actual == 0.0

    def test_violations_raise_invariant_error(self, w_instance, w_coupling):
        validate_coupling(w_instance, w_coupling).raise_for_violations()
        c = Coupling.from_pairs([((0, 0), 0.5), ((1, 1), 0.2), ((1, 2), 0.2)])
        with pytest.raises(InvariantError, match="2 marginal violations") as excinfo:
            validate_coupling(w_instance, c).raise_for_violations()
        assert excinfo.value.exit_code == 1

    def test_index_out_of_range(self, w_instance):
        c = Coupling.from_pairs([((0, 3), 1.0)])
        with pytest.raises(InvalidInputError, match="out of range"):
            validate_coupling(w_instance, c)

    def test_arity_mismatch(self, w_instance):
        c = Coupling.from_pairs([((0, 0, 0), 1.0)])
        with pytest.raises(InvalidInputError, match="arity"):
            validate_coupling(w_instance, c)

    def test_support_limit(self, w_instance):
        assert support_limit(w_instance) == 5
        three = InstanceSet.from_lists([[0.5, 0.5], [1.0], [0.25] * 4])
        assert support_limit(three) == 5
