"""
精确计数引擎
统计给定行和/列和的非负整数矩阵个数

按列动态规划：
- 状态为剩余行和的有序多重集（排序后的元组，去掉已为 0 的行）
- 每处理一列，把列和分配给剩余值相同的行组，组内用多项式系数计权，
  对称状态因此合并
- 最后两列不再枚举：第一列的分配唯一决定第二列，方案数是有界组合数
"""

import time
from collections import Counter, defaultdict
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, Optional, Sequence, Tuple

from config.config import DEADLINE_CHECK_INTERVAL

from ..utils.logger import get_logger
from .errors import CountBudgetError, InvalidMarginsError
from .margins import BigCount, GeneralMargins, MarginSpec

logger = get_logger(__name__)

State = Tuple[int, ...]
Groups = Tuple[Tuple[int, int], ...]


def bounded_compositions(caps: Sequence[int], total: int) -> BigCount:
    """
    满足 0 <= x_i <= caps[i] 且 sum(x) = total 的整数向量个数

    Args:
        caps: 各分量上界（非负）
        total: 目标总和

    Returns:
        BigCount: 方案数
    """
    if any(c < 0 for c in caps):
        raise InvalidMarginsError(f"上界不能为负数: {list(caps)}")
    if total < 0 or total > sum(caps):
        return 0
    return _bounded_compositions(tuple(sorted(caps)), total)


@lru_cache(maxsize=65536)
def _bounded_compositions(caps: State, total: int) -> BigCount:
    coeffs = [1] + [0] * total
    for cap in caps:
        # 乘以 (1 + x + ... + x^cap)，截断到 x^total，用滑动窗口求和
        merged = []
        window = 0
        for k in range(total + 1):
            window += coeffs[k]
            if k > cap:
                window -= coeffs[k - cap - 1]
            merged.append(window)
        coeffs = merged
    return coeffs[total]


@lru_cache(maxsize=65536)
def _group_splits(value: int, mult: int, amount: int) -> Tuple[Tuple[State, int], ...]:
    """
    mult 行剩余值都为 value，共分走 amount

    Returns:
        ((分走后的剩余值, 升序), 有序分配方案数) 的元组
    """
    splits = []
    takes = []

    def rec(slots: int, remaining: int, cap: int) -> None:
        if slots == 0:
            if remaining == 0:
                weight = factorial(mult)
                for k in Counter(takes).values():
                    weight //= factorial(k)
                splits.append((tuple(sorted(value - t for t in takes)), weight))
            return
        # takes 非增：当前值至少为 ceil(remaining / slots)
        lowest = -(-remaining // slots)
        for t in range(min(cap, remaining), lowest - 1, -1):
            takes.append(t)
            rec(slots - 1, remaining - t, t)
            takes.pop()

    if 0 <= amount <= value * mult:
        rec(mult, amount, value)
    return tuple(splits)


def _group(state: State) -> Groups:
    return tuple(sorted(Counter(state).items()))


def _column_transitions(state: State, amount: int) -> Iterator[Tuple[State, int]]:
    """把列和 amount 分给 state 的各行，产出 (新状态, 方案数)"""
    groups = _group(state)
    suffix = [0] * (len(groups) + 1)
    for i in range(len(groups) - 1, -1, -1):
        value, mult = groups[i]
        suffix[i] = suffix[i + 1] + value * mult

    def rec(i: int, remaining: int, parts: State, weight: int) -> Iterator[Tuple[State, int]]:
        if i == len(groups):
            if remaining == 0:
                yield tuple(sorted(v for v in parts if v)), weight
            return
        value, mult = groups[i]
        low = max(0, remaining - suffix[i + 1])
        high = min(remaining, value * mult)
        for share in range(low, high + 1):
            for rest, w in _group_splits(value, mult, share):
                yield from rec(i + 1, remaining - share, parts + rest, weight * w)

    yield from rec(0, amount, (), 1)


def count_margins_general(
    margins: GeneralMargins,
    deadline: Optional[float] = None,
) -> BigCount:
    """
    统计行和为 margins.row_sums、列和为 margins.col_sums 的非负整数矩阵个数

    Args:
        margins: 边际（构造时已校验平衡）
        deadline: time.monotonic() 截止时刻，None 表示不限时

    Returns:
        BigCount: 精确个数，与行、列的顺序无关

    Raises:
        CountBudgetError: 超过截止时刻
    """
    rows, cols = margins.row_sums, margins.col_sums
    # 行数较少时状态更小
    if len(rows) > len(cols):
        rows, cols = cols, rows
    if len(rows) == 1 or len(cols) == 1:
        return 1

    cols = sorted(cols, reverse=True)
    layer: Dict[State, int] = {tuple(sorted(r for r in rows if r)): 1}
    processed = 0

    for step, amount in enumerate(cols[:-2], start=1):
        following: Dict[State, int] = defaultdict(int)
        for state, ways in layer.items():
            for new_state, weight in _column_transitions(state, amount):
                following[new_state] += ways * weight
            processed += 1
            if deadline is not None and processed % DEADLINE_CHECK_INTERVAL == 0:
                _check_deadline(deadline, margins)
        layer = following
        logger.debug(f"第 {step} 列处理完毕，状态数 {len(layer)}")

    if deadline is not None:
        _check_deadline(deadline, margins)

    closing = cols[-2]
    return sum(ways * bounded_compositions(state, closing) for state, ways in layer.items())


def _check_deadline(deadline: float, margins: GeneralMargins) -> None:
    if time.monotonic() > deadline:
        raise CountBudgetError(
            f"计数超过时间预算: rows={list(margins.row_sums)} cols={list(margins.col_sums)}",
            label=f"{margins.m}x{margins.n}",
        )


def count_constant_margins(spec: MarginSpec, deadline: Optional[float] = None) -> BigCount:
    """
    M(m,s;n,t)：m 行每行和为 s、n 列每列和为 t 的非负整数矩阵个数

    Args:
        spec: 常数边际
        deadline: time.monotonic() 截止时刻

    Returns:
        BigCount: 精确个数
    """
    return count_margins_general(spec.to_general(), deadline=deadline)
