"""
计数估计适用条件检查
检查 (1+2λ)²/(4λ(1+λ)) · (1 + 5m/(6n) + 5n/(6m)) <= a·log n 是否成立

条件是渐近意义上的，检查结果只作参考，从不阻止估计。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from config.config import HYP_DEFAULT_A, HYP_DEFAULT_B

from ..utils.logger import get_logger

logger = get_logger(__name__)

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class HypReport:
    """条件检查结果"""
    lhs: float
    rhs: float
    satisfied: bool
    a: float
    b: float
    factor1: float
    factor2: float

    def summary(self, digits: int = 6) -> str:
        return (
            f"lhs = {self.lhs:.{digits}g}｜rhs = a·log n = {self.rhs:.{digits}g}｜"
            f"满足: {'是' if self.satisfied else '否'}"
        )


def density_factor(lam: Number) -> Fraction:
    """(1+2λ)²/(4λ(1+λ))，恒 >= 1，λ→∞ 时趋于 1"""
    lam = Fraction(lam)
    return (1 + 2 * lam) ** 2 / (4 * lam * (1 + lam))


def shape_factor(m: int, n: int) -> Fraction:
    """1 + 5m/(6n) + 5n/(6m)，m = n 时取最小值 8/3"""
    return 1 + Fraction(5 * m, 6 * n) + Fraction(5 * n, 6 * m)


def hyp_margin(
    m: int,
    n: int,
    lam: Number = 1,
    a: float = HYP_DEFAULT_A,
    b: float = HYP_DEFAULT_B,
) -> HypReport:
    """
    计算条件两侧的数值

    Args:
        m, n: 矩阵尺寸，n >= 2
        lam: 密度 λ > 0（整数、分数或浮点）
        a: 常数 a > 0
        b: 常数 b，只用于检查 a + b < 1/2

    Returns:
        HypReport
    """
    if n < 2 or m < 1:
        raise ValueError(f"要求 m >= 1, n >= 2: m={m}, n={n}")
    if Fraction(lam) <= 0 or a <= 0:
        raise ValueError(f"要求 λ > 0 且 a > 0: λ={lam}, a={a}")
    if a + b >= 0.5:
        logger.warning(f"a + b = {a + b:g} 不满足 a + b < 1/2")

    factor1 = density_factor(lam)
    factor2 = shape_factor(m, n)
    # 左侧用精确有理数计算，λ=1、m=n 时恰为 3
    lhs = float(factor1 * factor2)
    rhs = a * math.log(n)
    report = HypReport(
        lhs=lhs,
        rhs=rhs,
        satisfied=lhs <= rhs,
        a=a,
        b=b,
        factor1=float(factor1),
        factor2=float(factor2),
    )
    logger.debug(report.summary())
    return report
