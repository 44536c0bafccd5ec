"""
对数实数
以自然对数保存正数，计数和体积动辄跨越数百个数量级
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

LN10 = math.log(10.0)

# 超过此对数值时不再经过 float 转换
_FLOAT_SAFE_LOG = 700.0


@dataclass(frozen=True, order=True)
class LogReal:
    """正实数 exp(log_value)；乘除幂运算都在对数上进行"""
    log_value: float

    def __post_init__(self):
        value = float(self.log_value)
        if not math.isfinite(value):
            raise ValueError(f"LogReal 的对数值必须有限: {self.log_value}")
        object.__setattr__(self, 'log_value', value)

    @classmethod
    def from_value(cls, value: Union[int, float, Fraction]) -> 'LogReal':
        """由正数构造；大整数与分数直接取对数，不经 float 溢出"""
        if value <= 0:
            raise ValueError(f"LogReal 只能表示正数: {value}")
        if isinstance(value, Fraction):
            return cls(math.log(value.numerator) - math.log(value.denominator))
        return cls(math.log(value))

    def __mul__(self, other: 'LogReal') -> 'LogReal':
        return LogReal(self.log_value + other.log_value)

    def __truediv__(self, other: 'LogReal') -> 'LogReal':
        return LogReal(self.log_value - other.log_value)

    def __pow__(self, exponent: float) -> 'LogReal':
        return LogReal(self.log_value * exponent)

    @property
    def log10(self) -> float:
        return self.log_value / LN10

    def exp_or_inf(self) -> float:
        """转换为 float，上溢时返回 inf，下溢时返回 0.0"""
        if self.log_value > _FLOAT_SAFE_LOG:
            return math.inf
        return math.exp(self.log_value)

    def to_scientific(self, digits: int = 6) -> str:
        """
        按有效数字格式化，不依赖 float 能否表示原值

        Args:
            digits: 有效数字位数
        """
        if abs(self.log_value) < _FLOAT_SAFE_LOG:
            return f"{math.exp(self.log_value):.{digits}g}"
        exponent = math.floor(self.log10)
        mantissa = round(10 ** (self.log10 - exponent), digits - 1)
        if mantissa >= 10:
            mantissa /= 10
            exponent += 1
        return f"{mantissa:.{digits - 1}f}e{exponent:+d}"

    def __str__(self) -> str:
        return self.to_scientific()
