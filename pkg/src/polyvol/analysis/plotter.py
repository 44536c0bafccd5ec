"""
可视化报告模块
绘制体积估计与精确值之比随 n 的变化
"""

import os
from typing import List

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from .table1 import TableRow  # noqa: E402


def plot_ratio_chart(rows: List[TableRow], output_path: str) -> str:
    """
    绘制 estimate/actual 比值折线图

    图中文字只用 ASCII，没有中文字体的环境下不缺字形。

    Args:
        rows: 对照表行（没有精确值的行跳过）
        output_path: 输出图片路径

    Returns:
        str: 生成的图片路径
    """
    points = [(row.n, row.ratio) for row in rows if row.ratio is not None]
    if not points:
        raise ValueError("没有可绘制的比值（所有行都缺少精确体积）")

    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    ns, ratios = zip(*points)
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(ns, ratios, marker='o', color='#2E86AB', linewidth=2, label='estimate / exact')
    ax.axhline(1.0, color='gray', linestyle='--', alpha=0.6)
    for n, ratio in points:
        ax.annotate(f"{ratio:.5f}", (n, ratio), textcoords='offset points',
                    xytext=(0, 8), ha='center', fontsize=9)
    ax.set_xlabel('n')
    ax.set_ylabel('estimate / exact')
    ax.set_title('Birkhoff polytope volume: estimate vs exact', fontsize=14, fontweight='bold')
    ax.set_xticks(list(ns))
    ax.grid(True, alpha=0.3)
    ax.legend()

    fig.tight_layout()
    fig.savefig(output_path, dpi=150)
    plt.close(fig)
    return output_path
