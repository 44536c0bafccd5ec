"""
绝对体积模块
vol(T_{m,n}) = m^((n-1)/2) · n^((m-1)/2) · nu(T_{m,n})，以根式形式精确保存
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..asymptotics.logreal import LogReal


def _exact_sqrt(value: Fraction) -> Optional[Fraction]:
    """有理数的精确平方根，不是完全平方时返回 None"""
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True)
class ScaledVolume:
    """
    根式形式的体积：coeff · m^(m_exp2/2) · n^(n_exp2/2)

    比较大小或相等时用平方后的有理数，不引入浮点误差。
    """
    coeff: Fraction
    m_exp2: int
    n_exp2: int
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, 'coeff', Fraction(self.coeff))
        if self.coeff <= 0:
            raise ValueError(f"体积必须为正: {self.coeff}")

    def squared(self) -> Fraction:
        """体积的平方（精确有理数）"""
        return self.coeff ** 2 * Fraction(self.m) ** self.m_exp2 * Fraction(self.n) ** self.n_exp2

    def as_fraction(self) -> Optional[Fraction]:
        """体积为有理数时返回精确值（m = n 时总是如此），否则返回 None"""
        return _exact_sqrt(self.squared())

    def value_equals(self, other: 'ScaledVolume') -> bool:
        """两个根式表示的实数值是否相等"""
        return self.squared() == other.squared()

    def scaled(self, factor: Union[int, Fraction]) -> 'ScaledVolume':
        """乘以正有理数"""
        return ScaledVolume(self.coeff * Fraction(factor), self.m_exp2, self.n_exp2, self.m, self.n)

    def to_log(self) -> LogReal:
        return LogReal(
            LogReal.from_value(self.coeff).log_value
            + self.m_exp2 / 2.0 * math.log(self.m)
            + self.n_exp2 / 2.0 * math.log(self.n)
        )

    def __float__(self) -> float:
        return self.to_log().exp_or_inf()

    def radical_form(self) -> str:
        """
        化简后的根式字符串，例如 '9/8'、'2/3*sqrt(3)'
        """
        exact = self.as_fraction()
        if exact is not None:
            return str(exact)

        coeff = self.coeff
        radicand = 1
        if self.m == self.n:
            bases = [(self.m, self.m_exp2 + self.n_exp2)]
        else:
            bases = [(self.m, self.m_exp2), (self.n, self.n_exp2)]
        for base, exp2 in bases:
            whole, half = divmod(exp2, 2)
            coeff *= Fraction(base) ** whole
            if half:
                radicand *= base
        return f"{coeff}*sqrt({radicand})"

    def __str__(self) -> str:
        return self.radical_form()


def absolute_volume(m: int, n: int, nu: Union[int, Fraction]) -> ScaledVolume:
    """
    由相对体积 nu 得到绝对体积

    Args:
        m, n: 多面体参数
        nu: 相对体积，必须为正

    Returns:
        ScaledVolume: m 或 n 为 1 时多面体是一个点，体积恰为 1
    """
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError(f"相对体积必须为正: {nu}")
    if m < 1 or n < 1:
        raise ValueError(f"m, n 必须至少为 1: m={m}, n={n}")
    if m == 1 or n == 1:
        return ScaledVolume(Fraction(1), 0, 0, m, n)
    return ScaledVolume(nu, n - 1, m - 1, m, n)
