"""
测试比值折线图
"""
import warnings

import pytest

from polyvol.analysis.plotter import plot_ratio_chart
from polyvol.analysis.table1 import build_table1
from polyvol.core.service import CountService


def test_plot_written(tmp_path):
    rows = build_table1(3, 3, CountService(cache=None, time_budget=None, max_workers=1))
    output = tmp_path / "reports" / "ratio.png"
    assert plot_ratio_chart(rows, str(output)) == str(output)
    assert output.stat().st_size > 0


def test_plot_requires_ratios(tmp_path):
    rows = build_table1(2, 0, CountService(cache=None, time_budget=None, max_workers=1))
    with pytest.raises(ValueError):
        plot_ratio_chart(rows, str(tmp_path / "ratio.png"))


def test_plot_has_no_missing_glyphs(tmp_path):
    """默认字体下渲染不产生缺字形警告"""
    rows = build_table1(3, 3, CountService(cache=None, time_budget=None, max_workers=1))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        plot_ratio_chart(rows, str(tmp_path / "ratio.png"))
    assert not [w for w in caught if "missing from" in str(w.message)]
