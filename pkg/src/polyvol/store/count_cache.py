"""
计数缓存模块
把已验证的精确计数持久化到纯文本文件，每行一条记录：m,s,n,t,count
"""

import os
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from config.config import COUNT_CACHE_FILE

from ..core.errors import (
    CacheContradictionError,
    CacheCorruptionError,
    CacheLockedError,
    InvalidMarginsError,
)
from ..core.margins import BigCount, MarginSpec
from ..utils.logger import get_logger

try:
    import fcntl
except ImportError:  # Windows 没有 fcntl，退化为不加锁
    fcntl = None

logger = get_logger(__name__)

CACHE_HEADER = "m,s,n,t,count"

Key = Tuple[int, int, int, int]


@dataclass(frozen=True)
class CacheEntry:
    """一条缓存记录，count 以十进制字符串保存"""
    m: int
    s: int
    n: int
    t: int
    count: str

    @classmethod
    def from_count(cls, spec: MarginSpec, count: BigCount) -> 'CacheEntry':
        canon = spec.canonical()
        return cls(canon.m, canon.s, canon.n, canon.t, str(count))

    @property
    def key(self) -> Key:
        return (self.m, self.s, self.n, self.t)

    @property
    def value(self) -> BigCount:
        return int(self.count)

    def serialize(self) -> str:
        return f"{self.m},{self.s},{self.n},{self.t},{self.count}"

    @classmethod
    def parse(cls, line: str, line_no: int = 0) -> 'CacheEntry':
        """
        解析一行记录

        Raises:
            CacheCorruptionError: 字段数、数值或边际不合法，消息中带行号
        """
        fields = line.strip().split(',')
        if len(fields) != 5:
            raise CacheCorruptionError(
                f"缓存第 {line_no} 行字段数为 {len(fields)}，应为 5: {line.strip()!r}",
                line_no=line_no,
            )
        m, s, n, t, count = (f.strip() for f in fields)
        if not (count.isascii() and count.isdigit()):
            raise CacheCorruptionError(
                f"缓存第 {line_no} 行计数不是十进制非负整数: {count!r}", line_no=line_no
            )
        try:
            spec = MarginSpec(int(m), int(s), int(n), int(t))
        except (ValueError, InvalidMarginsError) as exc:
            raise CacheCorruptionError(f"缓存第 {line_no} 行边际不合法: {exc}", line_no=line_no) from exc
        # 去掉前导 0，保证序列化往返一致
        return cls.from_count(spec, int(count))


class CountCache:
    """
    计数缓存

    功能：
    1. 启动时载入文件，逐行校验
    2. 按转置规范方向查询，(m,s,n,t) 与 (n,t,m,s) 命中同一条
    3. 追加写入；同键同值为空操作，同键异值视为损坏
    4. 打开期间持有建议锁，同一缓存文件只允许一个进程使用

    filepath 为 None 时只在内存中缓存。
    """

    def __init__(self, filepath: Optional[str] = COUNT_CACHE_FILE):
        self.filepath = filepath
        self.entries: Dict[Key, CacheEntry] = {}
        self._lock_handle = None
        if filepath:
            self._ensure_directory()
            self._acquire_lock()
            try:
                self._load()
            except CacheCorruptionError:
                self.close()
                raise

    def _ensure_directory(self) -> None:
        """确保缓存文件所在目录存在"""
        directory = os.path.dirname(self.filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _acquire_lock(self) -> None:
        if fcntl is None:
            return
        handle = open(f"{self.filepath}.lock", 'a', encoding='utf-8')
        try:
            fcntl.flock(handle.fileno(), fcntl.LOCK_EX | fcntl.LOCK_NB)
        except OSError as exc:
            handle.close()
            raise CacheLockedError(f"缓存文件正被其他进程使用: {self.filepath}") from exc
        self._lock_handle = handle

    def close(self) -> None:
        """释放建议锁"""
        if self._lock_handle is not None:
            fcntl.flock(self._lock_handle.fileno(), fcntl.LOCK_UN)
            self._lock_handle.close()
            self._lock_handle = None

    def __enter__(self) -> 'CountCache':
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    def _load(self) -> None:
        """从文件加载缓存记录"""
        if not os.path.exists(self.filepath):
            return
        with open(self.filepath, 'r', encoding='utf-8') as f:
            for line_no, line in enumerate(f, start=1):
                if line_no == 1:
                    if line.strip() != CACHE_HEADER:
                        raise CacheCorruptionError(
                            f"缓存第 1 行表头应为 {CACHE_HEADER!r}: {line.strip()!r}", line_no=1
                        )
                    continue
                if not line.strip():
                    continue
                entry = CacheEntry.parse(line, line_no)
                existing = self.entries.get(entry.key)
                if existing is not None and existing.count != entry.count:
                    raise CacheContradictionError(
                        f"cache contradiction: 第 {line_no} 行 {entry.key} 与先前记录不一致",
                        line_no=line_no,
                    )
                self.entries[entry.key] = entry
        logger.info(f"已加载 {len(self.entries)} 条计数缓存: {self.filepath}")

    def lookup(self, spec: MarginSpec) -> Optional[BigCount]:
        """
        查询缓存

        Args:
            spec: 常数边际，任一转置方向均可

        Returns:
            缓存的精确计数，未命中返回 None
        """
        entry = self.entries.get(spec.canonical().key())
        return None if entry is None else entry.value

    def store(self, spec: MarginSpec, count: BigCount) -> None:
        """
        写入缓存

        Raises:
            CacheContradictionError: 已存在同键但不同值的记录
        """
        entry = CacheEntry.from_count(spec, count)
        existing = self.entries.get(entry.key)
        if existing is not None:
            if existing.count != entry.count:
                raise CacheContradictionError(
                    f"cache contradiction: {entry.key} 已缓存 {existing.count}，新值 {entry.count}"
                )
            return

        self.entries[entry.key] = entry
        if self.filepath:
            is_new = not os.path.exists(self.filepath) or os.path.getsize(self.filepath) == 0
            with open(self.filepath, 'a', encoding='utf-8') as f:
                if is_new:
                    f.write(CACHE_HEADER + "\n")
                f.write(entry.serialize() + "\n")
        logger.debug(f"缓存写入 {entry.key}")

    def __len__(self) -> int:
        return len(self.entries)
