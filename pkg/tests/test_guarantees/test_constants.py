"""Tests for the additive guarantee constants."""

import pytest

from mec.core.models import HALF_ONE_PLUS_LG_E, LG_E, LG_E_OVER_E
from mec.guarantees.constants import guarantee_table, small_m_constant
from mec.utils.errors import InvalidInputError

PUBLISHED = {2: 0.53, 3: 0.77, 4: 0.90, 5: 0.99, 6: 1.06, 7: 1.10, 8: 1.14, 9: 1.17, 10: 1.19, 11: 1.21}


class TestSmallMConstant:
    """Test suite for small_m_constant."""

    def test_two_distributions(self):
        report = small_m_constant(2)
        assert report.value == pytest.approx(LG_E_OVER_E, abs=1e-4)
        assert report.point[0] == pytest.approx(0.367879, abs=1e-3)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_published_values(self, m):
        assert small_m_constant(m).value == pytest.approx(PUBLISHED[m], abs=5e-3)

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [7, 8, 9, 10, 11])
    def test_published_values_large(self, m):
        assert small_m_constant(m).value == pytest.approx(PUBLISHED[m], abs=5e-3)

    def test_increasing_and_below_lg_e(self):
        values = [small_m_constant(m).value for m in range(2, 7)]
        assert all(b > a for a, b in zip(values, values[1:], strict=False))
        assert values[-1] < LG_E

    def test_point_is_ordered(self):
        point = small_m_constant(4).point
        assert len(point) == 3
        assert all(0.0 < a < b < 1.0 for a, b in zip(point, point[1:], strict=False))

    def test_rejects_m_one(self):
        with pytest.raises(InvalidInputError):
            small_m_constant(1)


class TestGuaranteeTable:
    """Test suite for guarantee_table."""

    def test_rows(self):
        rows = guarantee_table([2, 3])
        assert [row.parameter for row in rows] == ["m=2", "m=3"]
        assert rows[1].value == pytest.approx(0.7668, abs=1e-3)
        assert rows[0].extras["any_m"] == pytest.approx(HALF_ONE_PLUS_LG_E)
