"""
大规模实例的回归基准
基准文件 tests/data/regression_pins.json 由 tools/pin_regressions.py 生成并提交；
文件缺失视为失败
"""
import json
import math
from fractions import Fraction
from pathlib import Path

import pytest

from polyvol.asymptotics.estimates import estimate_count_log, estimate_rel_volume_proxy_log
from polyvol.core.margins import MarginSpec
from polyvol.core.service import CountService

PINS_FILE = Path(__file__).resolve().parents[2] / "data" / "regression_pins.json"


def load_pins():
    if not PINS_FILE.exists():
        pytest.fail(f"缺少回归基准文件: {PINS_FILE}（运行 tools/pin_regressions.py 生成）")
    with open(PINS_FILE, "r", encoding="utf-8") as f:
        return json.load(f)


def pinned_counts():
    return {(p["m"], p["s"], p["n"], p["t"]): p for p in load_pins()["counts"]}


class TestPinsFile:
    """基准文件本身"""

    def test_required_instances_present(self):
        """8×8 的 λ=1、λ=2 计数和 (3,3) 代理值都已固定"""
        pins = load_pins()
        assert {(8, 8, 8, 8), (8, 16, 8, 16)} <= set(pinned_counts())
        proxies = {(p["m"], p["n"], p["lambda_mult"]) for p in pins["proxies"]}
        assert {(3, 3, 16), (3, 3, 32), (3, 3, 64)} <= proxies
        assert [row["n"] for row in pins["table1"]] == [1, 2, 3, 4, 5]


class TestPinnedCounts:
    """计数估计与精确计数之比"""

    def test_estimates_unchanged(self):
        for pin in pinned_counts().values():
            spec = MarginSpec(pin["m"], pin["s"], pin["n"], pin["t"])
            assert estimate_count_log(spec).log_value == pytest.approx(pin["estimate_log"], abs=1e-9)

    def test_ratios_match_pins(self):
        """比值由估计与精确计数重算，与固定值一致且接近 1"""
        for pin in pinned_counts().values():
            ratio = math.exp(pin["estimate_log"] - math.log(int(pin["count"])))
            assert ratio == pytest.approx(pin["ratio"], abs=1e-9)
            assert 1.1 < ratio < 1.15, pin

    def test_eight_by_eight_density_one(self):
        """8×8、λ=1 的精确计数只需数秒，每次都重新计算"""
        spec = MarginSpec(8, 8, 8, 8)
        exact = CountService(cache=None, time_budget=None, max_workers=1).count(spec)
        pin = pinned_counts()[spec.key()]
        assert str(exact) == pin["count"]
        assert len(str(exact)) == 25
        ratio = math.exp(estimate_count_log(spec).log_value - math.log(exact))
        assert ratio == pytest.approx(1.137236, abs=1e-6)

    @pytest.mark.slow
    def test_eight_by_eight_density_two(self):
        """8×8、λ=2：耗时超过十分钟"""
        spec = MarginSpec(8, 16, 8, 16)
        exact = CountService(cache=None, time_budget=None, max_workers=4).count(spec)
        assert str(exact) == pinned_counts()[spec.key()]["count"]


class TestPinnedProxies:
    """(3,3) 相对体积代理值"""

    def test_proxies_unchanged(self):
        for pin in load_pins()["proxies"]:
            value = estimate_rel_volume_proxy_log(pin["m"], pin["n"], pin["lambda_mult"]).log_value
            assert value == pytest.approx(pin["log"], abs=1e-9)

    def test_proxies_decrease_towards_limit(self):
        """代理值从上方单调逼近极限，且都高于 log(1/8)"""
        values = [p["log"] for p in sorted(load_pins()["proxies"], key=lambda p: p["lambda_mult"])
                  if (p["m"], p["n"]) == (3, 3)]
        assert values == sorted(values, reverse=True)
        assert all(v > math.log(1 / 8) for v in values)


class TestPinnedVolumes:
    """精确体积"""

    def test_relative_volumes_have_integral_normalization(self):
        for pin in load_pins()["relative_volumes"]:
            d = (pin["m"] - 1) * (pin["n"] - 1)
            normalized = math.factorial(d) * Fraction(pin["nu"])
            assert normalized.denominator == 1 and normalized > 0

    def test_table_volumes_agree_with_relative_volumes(self):
        """vol(B_n) = n^(n-1) * nu(B_n)"""
        pins = load_pins()
        nus = {pin["n"]: Fraction(pin["nu"]) for pin in pins["relative_volumes"] if pin["m"] == pin["n"]}
        volumes = {row["n"]: Fraction(row["volume"]) for row in pins["table1"]}
        for n, nu in nus.items():
            assert volumes[n] == n ** (n - 1) * nu
