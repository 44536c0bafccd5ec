"""
暴力枚举计数（测试基准）
逐一列举所有候选矩阵再按边际过滤，与计数引擎不共享任何逻辑
"""

from math import prod
from typing import Optional

import numpy as np

from config.config import ORACLE_ENUMERATION_BUDGET

from .errors import OracleBudgetError
from .margins import BigCount, GeneralMargins


def candidate_count(margins: GeneralMargins) -> int:
    """候选矩阵个数：元素 (i,j) 取遍 0..min(r_i, c_j)"""
    return prod(
        min(r, c) + 1
        for r in margins.row_sums
        for c in margins.col_sums
    )


def brute_force_count(margins: GeneralMargins, budget: Optional[int] = None) -> BigCount:
    """
    穷举计数

    Args:
        margins: 边际
        budget: 候选矩阵数量上限，默认取配置 ORACLE_ENUMERATION_BUDGET

    Returns:
        BigCount: 满足全部边际的矩阵个数

    Raises:
        OracleBudgetError: 候选数量超过预算
    """
    budget = ORACLE_ENUMERATION_BUDGET if budget is None else budget
    total = candidate_count(margins)
    if total > budget:
        raise OracleBudgetError(f"oracle budget exceeded: {total} 个候选 > {budget}")

    m, n = margins.m, margins.n
    ranges = [
        np.arange(min(r, c) + 1, dtype=np.int32)
        for r in margins.row_sums
        for c in margins.col_sums
    ]
    # 里程表式展开：每一行是一个候选矩阵的全部元素
    grids = np.meshgrid(*ranges, indexing='ij')
    candidates = np.stack([g.ravel() for g in grids], axis=1).reshape(-1, m, n)

    row_ok = (candidates.sum(axis=2) == np.asarray(margins.row_sums)).all(axis=1)
    col_ok = (candidates.sum(axis=1) == np.asarray(margins.col_sums)).all(axis=1)
    return int(np.count_nonzero(row_ok & col_ok))
