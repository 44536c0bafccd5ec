"""
Ehrhart 伪多项式模块
由精确格点计数插值得到 H_{m,n}(z)，并提取相对体积（首项系数）

H(z) = |zT_{m,n} ∩ Z^{m×n}|：z 为周期 z0 的倍数时是 d = (m-1)(n-1) 次多项式，
否则为 0。插值在网格 z = 0, z0, ..., d·z0 上用牛顿前向差分完成，全程有理数运算。
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import List, Optional, Sequence, Tuple

from ..core.margins import BigCount, MarginSpec
from ..core.service import CountService, default_count_service
from ..utils.logger import get_logger

logger = get_logger(__name__)


def period(m: int, n: int) -> int:
    """周期 z0 = n / gcd(m, n)：最小的使 zT_{m,n} 含格点（且顶点为整点）的伸缩倍数"""
    if m < 1 or n < 1:
        raise ValueError(f"m, n 必须至少为 1: m={m}, n={n}")
    return n // gcd(m, n)


def degree(m: int, n: int) -> int:
    """T_{m,n} 的维数 (m-1)(n-1)"""
    return (m - 1) * (n - 1)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """
    Ehrhart 伪多项式

    coeffs[i] 为 z^(d-i) 的系数，即 coeffs[0] = c_0 为首项（相对体积），
    coeffs[d] = c_d = H(0) = 1。
    """
    m: int
    n: int
    z0: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"系数个数 {len(self.coeffs)} 与次数 {self.degree} 不符"
            )

    @property
    def degree(self) -> int:
        return degree(self.m, self.n)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[0]

    def evaluate(self, z: int) -> Fraction:
        """伪多项式取值：z0 不整除 z 时为 0"""
        if z % self.z0:
            return Fraction(0)
        value = Fraction(0)
        for c in self.coeffs:
            value = value * z + c
        return value

    __call__ = evaluate

    @property
    def normalized_volume(self) -> int:
        """
        整点多面体 z0·T_{m,n} 的规范化体积 d!·z0^d·c_0

        Raises:
            ValueError: 结果不是正整数（插值数据有误）
        """
        value = factorial(self.degree) * Fraction(self.z0) ** self.degree * self.leading
        if value.denominator != 1 or value <= 0:
            raise ValueError(f"规范化体积不是正整数: {value}")
        return int(value)

    def grid(self) -> List[int]:
        """插值网格 z = 0, z0, ..., d·z0"""
        return [j * self.z0 for j in range(self.degree + 1)]


def forward_differences(values: Sequence[int]) -> List[Fraction]:
    """返回 Δ^k y_0，k = 0..len(values)-1"""
    row = [Fraction(v) for v in values]
    diffs = []
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return diffs


def newton_to_monomial(diffs: Sequence[Fraction]) -> List[Fraction]:
    """
    牛顿形式 p(u) = Σ Δ^k y_0 · C(u, k) 展开为 u 的升幂系数
    """
    coeffs = [Fraction(0)] * len(diffs)
    basis = [Fraction(1)]  # C(u, 0)
    for k, delta in enumerate(diffs):
        for i, b in enumerate(basis):
            coeffs[i] += delta * b
        # C(u, k+1) = C(u, k) · (u - k) / (k + 1)
        shifted = [Fraction(0)] + basis
        for i, b in enumerate(basis):
            shifted[i] -= k * b
        basis = [c / (k + 1) for c in shifted]
    return coeffs


def interpolate_values(m: int, n: int, values: Sequence[int]) -> EhrhartPolynomial:
    """
    由网格取值 H(0), H(z0), ..., H(d·z0) 插值

    u = z / z0，u^i 的系数除以 z0^i 即得 z^i 的系数。
    """
    z0 = period(m, n)
    d = degree(m, n)
    if len(values) != d + 1:
        raise ValueError(f"需要 {d + 1} 个网格值，实际 {len(values)}")
    ascending = newton_to_monomial(forward_differences(values))
    in_z = [c / Fraction(z0) ** i for i, c in enumerate(ascending)]
    poly = EhrhartPolynomial(m, n, z0, tuple(reversed(in_z)))
    if poly.leading == 0:
        logger.warning(f"T_{m},{n} 插值结果首项为 0，次数低于 {d}")
    return poly


def ehrhart_value(
    m: int,
    n: int,
    z: int,
    service: Optional[CountService] = None,
) -> BigCount:
    """
    H_{m,n}(z)：行和 z、列和 zm/n 的非负整数 m×n 矩阵个数；z0 不整除 z 时为 0
    """
    if z < 0:
        raise ValueError(f"z 不能为负数: {z}")
    if z % period(m, n):
        return 0
    service = service or default_count_service
    return service.count(MarginSpec.for_dilation(m, n, z))


def interpolate_ehrhart(
    m: int,
    n: int,
    service: Optional[CountService] = None,
) -> EhrhartPolynomial:
    """
    计算 T_{m,n} 的 Ehrhart 伪多项式

    Args:
        m, n: 多面体参数
        service: 计数服务（缓存/并行/时间预算），默认无缓存串行

    Returns:
        EhrhartPolynomial: 精确复现全部网格点
    """
    service = service or default_count_service
    z0 = period(m, n)
    d = degree(m, n)
    specs = [MarginSpec.for_dilation(m, n, j * z0) for j in range(1, d + 1)]
    logger.info(f"T_{m},{n}: 次数 {d}，周期 {z0}，需要 {len(specs)} 个网格计数")
    # H(0) = 1：零倍伸缩只含零矩阵
    values = [1] + service.count_many(specs)
    return interpolate_values(m, n, values)


def verify_polynomial(
    poly: EhrhartPolynomial,
    service: Optional[CountService] = None,
) -> bool:
    """在网格外的点 z = (d+1)·z0 上与一次新的精确计数比对"""
    z = (poly.degree + 1) * poly.z0
    actual = ehrhart_value(poly.m, poly.n, z, service)
    predicted = poly.evaluate(z)
    if predicted != actual:
        logger.warning(f"T_{poly.m},{poly.n} 在 z={z} 处校验失败: 预测 {predicted}，实际 {actual}")
    return predicted == actual


def relative_volume(poly: EhrhartPolynomial) -> Fraction:
    """相对体积 nu(T_{m,n}) = c_0"""
    return poly.leading


def transpose_relative_volume(m: int, n: int, nu: Fraction) -> Fraction:
    """由 nu(T_{m,n}) 得到 nu(T_{n,m}) = (n/m)^d · nu(T_{m,n})"""
    return Fraction(n, m) ** degree(m, n) * Fraction(nu)
