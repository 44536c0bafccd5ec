"""
异常定义
所有库内异常都继承自 PolyvolError，命令行据此映射退出码
"""


class PolyvolError(Exception):
    """库内异常基类"""


class InvalidMarginsError(PolyvolError, ValueError):
    """行和/列和不合法（负数、空维度等）"""


class UnbalancedMarginsError(InvalidMarginsError):
    """行和总量与列和总量不相等"""


class OracleBudgetError(PolyvolError, RuntimeError):
    """暴力枚举的候选数量超过预算"""


class CountBudgetError(PolyvolError, TimeoutError):
    """精确计数超过墙钟预算"""

    def __init__(self, message: str, label: str = ""):
        super().__init__(message)
        self.label = label


class CacheCorruptionError(PolyvolError):
    """缓存文件损坏"""

    def __init__(self, message: str, line_no: int = 0):
        super().__init__(message)
        self.line_no = line_no


class CacheContradictionError(CacheCorruptionError):
    """同一键写入了不同的计数"""


class CacheLockedError(PolyvolError):
    """缓存文件正被另一个进程使用"""
