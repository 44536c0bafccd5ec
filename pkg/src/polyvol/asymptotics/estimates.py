"""
渐近估计模块
在对数空间中计算矩阵计数估计、相对体积代理值和体积估计（误差项一律略去）
"""

import math
from fractions import Fraction

from scipy.special import gammaln

from ..core.margins import MarginSpec
from ..utils.logger import get_logger
from .logreal import LogReal

logger = get_logger(__name__)

LOG_2PI = math.log(2.0 * math.pi)


def log_binomial(p: int, q: int) -> LogReal:
    """
    log C(p, q)，用对数伽马函数计算

    Args:
        p: 上标，非负整数
        q: 下标，0 <= q <= p

    Returns:
        LogReal: C(p,0) 与 C(p,p) 精确返回 0
    """
    if q < 0 or p < 0 or q > p:
        raise ValueError(f"log_binomial 要求 0 <= q <= p，实际 p={p}, q={q}")
    if q == 0 or q == p:
        return LogReal(0.0)
    return LogReal(float(gammaln(p + 1) - gammaln(q + 1) - gammaln(p - q + 1)))


def estimate_count_log(spec: MarginSpec) -> LogReal:
    """
    M(m,s;n,t) 的渐近点估计（对数）

        C(n+s-1, n-1)^m * C(m+t-1, m-1)^n / C(mn+lambda*mn-1, mn-1) * e^(1/2)

    其中 lambda*mn = ms。要求 s, t >= 1。
    """
    m, s, n, t = spec.key()
    if s < 1 or t < 1:
        raise ValueError(f"计数估计要求 s, t >= 1: {spec}")
    cells = m * n
    mass = spec.lam * cells
    assert mass.denominator == 1, "lambda*mn 必须为整数"
    total = int(mass)

    log_value = (
        m * log_binomial(n + s - 1, n - 1).log_value
        + n * log_binomial(m + t - 1, m - 1).log_value
        - log_binomial(cells + total - 1, cells - 1).log_value
        + 0.5
    )
    return LogReal(log_value)


def estimate_rel_volume_proxy_log(m: int, n: int, lambda_mult: int) -> LogReal:
    """
    有限 lambda 下 log nu(T_{m,n}) 的代理值

    取 z = lambda_mult * z0，lambda = z/n，返回
        log M(m, z; n, zm/n) 的估计 - (m-1)(n-1) * log(lambda*n)

    z 增大时收敛到计数估计给出的 log nu 极限。
    """
    if lambda_mult < 1:
        raise ValueError(f"lambda_mult 必须至少为 1: {lambda_mult}")
    z0 = n // math.gcd(m, n)
    z = lambda_mult * z0
    spec = MarginSpec.for_dilation(m, n, z)
    degree = (m - 1) * (n - 1)
    # lambda * n 恰为 z
    return LogReal(estimate_count_log(spec).log_value - degree * math.log(z))


def estimate_volume_log(m: int, n: int) -> LogReal:
    """
    vol(T_{m,n}) 的渐近估计（对数）

        -((m+n-1)/2) log(2 pi) - (m-1)(n-1) log n + 1/3 + mn - (m-n)^2/(12mn)
    """
    if m < 1 or n < 1:
        raise ValueError(f"m, n 必须至少为 1: m={m}, n={n}")
    log_value = (
        -((m + n - 1) / 2.0) * LOG_2PI
        - (m - 1) * (n - 1) * math.log(n)
        + 1.0 / 3.0
        + m * n
        - float(Fraction((m - n) ** 2, 12 * m * n))
    )
    return LogReal(log_value)


def estimate_birkhoff_volume_log(n: int) -> LogReal:
    """
    vol(B_n) 的渐近估计（对数）

        -(n - 1/2) log(2 pi) - (n-1)^2 log n + 1/3 + n^2
    """
    if n < 1:
        raise ValueError(f"n 必须至少为 1: {n}")
    log_value = (
        -(n - 0.5) * LOG_2PI
        - (n - 1) ** 2 * math.log(n)
        + 1.0 / 3.0
        + n * n
    )
    return LogReal(log_value)


def volume_condition(m: int, n: int, a: float) -> bool:
    """体积估计的适用条件 max(m/n, n/m) <= (6/5) a log n（仅供参考）"""
    if n < 2:
        return False
    return max(m / n, n / m) <= 1.2 * a * math.log(n)
