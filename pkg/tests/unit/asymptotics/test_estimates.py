"""
测试渐近估计公式
"""
import math
from math import comb

import pytest

from polyvol.asymptotics.estimates import (
    estimate_birkhoff_volume_log,
    estimate_count_log,
    estimate_rel_volume_proxy_log,
    estimate_volume_log,
    log_binomial,
    volume_condition,
)
from polyvol.core.margins import MarginSpec


class TestLogBinomial:
    """对数二项式系数"""

    def test_small(self):
        assert log_binomial(4, 2).log_value == pytest.approx(math.log(6.0), rel=1e-12)

    def test_edges_are_exact(self):
        assert log_binomial(17, 0).log_value == 0.0
        assert log_binomial(17, 17).log_value == 0.0

    def test_large(self):
        assert log_binomial(100, 50).log_value == pytest.approx(math.log(comb(100, 50)), rel=1e-12)
        assert log_binomial(100, 50).log_value == pytest.approx(66.7839, abs=1e-4)

    @pytest.mark.parametrize("p, q", [(3, 4), (3, -1), (-1, 0)])
    def test_domain(self, p, q):
        with pytest.raises(ValueError):
            log_binomial(p, q)


class TestCountEstimate:
    """矩阵计数估计"""

    def test_hand_evaluated_point(self):
        value = estimate_count_log(MarginSpec(2, 1, 2, 1)).log_value
        assert value == pytest.approx(math.log(1.6) + 0.5, abs=1e-12)
        assert value == pytest.approx(0.9700036, abs=1e-7)

    @pytest.mark.parametrize("spec", [
        MarginSpec(2, 3, 3, 2),
        MarginSpec(3, 8, 4, 6),
        MarginSpec(5, 4, 10, 2),
        MarginSpec(8, 16, 8, 16),
        MarginSpec(3, 2, 3, 2),
    ])
    def test_transpose_symmetry(self, spec):
        assert estimate_count_log(spec).log_value == pytest.approx(
            estimate_count_log(spec.transpose()).log_value, rel=1e-12, abs=1e-12
        )

    def test_requires_positive_sums(self):
        with pytest.raises(ValueError):
            estimate_count_log(MarginSpec(2, 0, 2, 0))


class TestRelativeVolumeProxy:
    """有限 lambda 下的相对体积代理值"""

    def test_birkhoff_three_converges(self):
        target = math.log(1 / 8)
        gaps = [abs(estimate_rel_volume_proxy_log(3, 3, z).log_value - target) for z in (16, 32, 64)]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 0.5

    def test_two_by_three_converges(self):
        # z = lambda_mult · 3
        values = [estimate_rel_volume_proxy_log(2, 3, k).log_value for k in (10, 100, 1000)]
        assert abs(values[2] - values[1]) < abs(values[1] - values[0])
        assert values[2] == pytest.approx(math.log(1 / 3), abs=0.4)

    def test_invalid_multiplier(self):
        with pytest.raises(ValueError):
            estimate_rel_volume_proxy_log(3, 3, 0)


class TestVolumeEstimate:
    """体积估计"""

    def test_single_point(self):
        value = estimate_volume_log(1, 1).log_value
        assert value == pytest.approx(4 / 3 - 0.5 * math.log(2 * math.pi), abs=1e-12)
        assert math.exp(value) == pytest.approx(1.51345, abs=1e-5)

    def test_birkhoff_two(self):
        """vol(B_2) = 2，比值 1.20951"""
        estimate = math.exp(estimate_volume_log(2, 2).log_value)
        assert estimate == pytest.approx(2.4190394821, abs=1e-9)
        assert estimate / 2 == pytest.approx(1.20951, abs=2e-5)

    def test_birkhoff_three_ratio(self):
        assert math.exp(estimate_birkhoff_volume_log(3).log_value) / (9 / 8) == pytest.approx(1.25408, abs=2e-5)

    def test_birkhoff_reduction(self):
        for n in range(1, 51):
            assert estimate_birkhoff_volume_log(n).log_value == pytest.approx(
                estimate_volume_log(n, n).log_value, rel=1e-12, abs=1e-12
            )

    @pytest.mark.parametrize("m, n", [(2, 3), (2, 4), (3, 4), (5, 9), (1, 6)])
    def test_transpose_dilation_identity(self, m, n):
        diff = estimate_volume_log(m, n).log_value - estimate_volume_log(n, m).log_value
        expected = (m - 1) * (n - 1) * (math.log(m) - math.log(n))
        assert diff == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_invalid_dimensions(self):
        with pytest.raises(ValueError):
            estimate_volume_log(0, 3)
        with pytest.raises(ValueError):
            estimate_birkhoff_volume_log(0)

    def test_volume_condition(self):
        assert volume_condition(100, 100, 0.3) is True
        assert volume_condition(2, 100, 0.3) is False
        assert volume_condition(1, 1, 0.3) is False
