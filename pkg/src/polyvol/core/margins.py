"""
边际（行和/列和）数据结构
描述一个非负整数矩阵计数问题
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from .errors import InvalidMarginsError, UnbalancedMarginsError

# 精确计数：Python int 本身就是任意精度，从不舍入
BigCount = int


def _check_non_negative_int(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidMarginsError(f"{name} 必须为整数，实际为 {value!r}")
    if value < 0:
        raise InvalidMarginsError(f"{name} 不能为负数: {value}")


@dataclass(frozen=True)
class GeneralMargins:
    """任意行和/列和向量"""
    row_sums: Tuple[int, ...]
    col_sums: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'row_sums', tuple(self.row_sums))
        object.__setattr__(self, 'col_sums', tuple(self.col_sums))
        if not self.row_sums or not self.col_sums:
            raise InvalidMarginsError("行数和列数必须至少为 1")
        for i, r in enumerate(self.row_sums):
            _check_non_negative_int(f"row_sums[{i}]", r)
        for j, c in enumerate(self.col_sums):
            _check_non_negative_int(f"col_sums[{j}]", c)
        if sum(self.row_sums) != sum(self.col_sums):
            raise UnbalancedMarginsError(
                f"unbalanced margins: 行和总计 {sum(self.row_sums)}，"
                f"列和总计 {sum(self.col_sums)}"
            )

    @property
    def m(self) -> int:
        return len(self.row_sums)

    @property
    def n(self) -> int:
        return len(self.col_sums)

    @property
    def total(self) -> int:
        return sum(self.row_sums)

    def transpose(self) -> 'GeneralMargins':
        return GeneralMargins(self.col_sums, self.row_sums)

    @classmethod
    def parse(cls, rows: str, cols: str) -> 'GeneralMargins':
        """从 '2,1' / '1,1,1' 形式的字符串构造"""
        try:
            row_sums = [int(x) for x in rows.split(',') if x.strip()]
            col_sums = [int(x) for x in cols.split(',') if x.strip()]
        except ValueError as exc:
            raise InvalidMarginsError(f"无法解析边际: {rows!r} / {cols!r}") from exc
        return cls(tuple(row_sums), tuple(col_sums))


@dataclass(frozen=True)
class MarginSpec:
    """
    常数边际问题：m 行每行和为 s，n 列每列和为 t，要求 ms = nt

    lambda = s/n = t/m 为单元格均值（密度）。
    """
    m: int
    s: int
    n: int
    t: int

    def __post_init__(self):
        for name in ('m', 'n'):
            value = getattr(self, name)
            _check_non_negative_int(name, value)
            if value < 1:
                raise InvalidMarginsError(f"{name} 必须至少为 1: {value}")
        _check_non_negative_int('s', self.s)
        _check_non_negative_int('t', self.t)
        if self.m * self.s != self.n * self.t:
            raise UnbalancedMarginsError(
                f"unbalanced margins: ms = {self.m * self.s}，nt = {self.n * self.t}"
            )

    @property
    def lam(self) -> Fraction:
        """密度 lambda = s/n = t/m"""
        return Fraction(self.s, self.n)

    @property
    def total(self) -> int:
        """矩阵元素总和 ms = lambda*mn"""
        return self.m * self.s

    def transpose(self) -> 'MarginSpec':
        return MarginSpec(self.n, self.t, self.m, self.s)

    def canonical(self) -> 'MarginSpec':
        """转置对称下的规范方向：(m, s) 字典序不大于 (n, t)"""
        if (self.m, self.s) <= (self.n, self.t):
            return self
        return self.transpose()

    def to_general(self) -> GeneralMargins:
        return GeneralMargins((self.s,) * self.m, (self.t,) * self.n)

    def key(self) -> Tuple[int, int, int, int]:
        return (self.m, self.s, self.n, self.t)

    @classmethod
    def for_dilation(cls, m: int, n: int, z: int) -> 'MarginSpec':
        """z 倍伸缩的运输多面体 zT_{m,n}：行和 z，列和 zm/n（要求整除）"""
        if (z * m) % n:
            raise InvalidMarginsError(f"z={z} 不是周期 {n // gcd(m, n)} 的倍数")
        return cls(m, z, n, z * m // n)

