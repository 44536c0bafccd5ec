"""
计数服务
在计数引擎外包一层：缓存查询、进程池并行、单次计数时间预算
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence, Tuple

from config.config import COUNT_TIME_BUDGET, WORKER_THREADS

from ..utils.logger import get_logger
from .counter import count_constant_margins
from .margins import BigCount, MarginSpec

logger = get_logger(__name__)


def timed_count(spec: MarginSpec, time_budget: Optional[float] = None) -> BigCount:
    """在 time_budget 秒内完成一次精确计数（进程池入口，须为模块级函数）"""
    deadline = None if time_budget is None else time.monotonic() + time_budget
    return count_constant_margins(spec, deadline=deadline)


class CountService:
    """
    带缓存的计数服务

    - 先查缓存（按转置规范方向）
    - 未命中的计数可分发到进程池，结果按键收集，与调度顺序无关
    - 缓存写入只在主进程中串行进行
    """

    def __init__(
        self,
        cache=None,
        time_budget: Optional[float] = COUNT_TIME_BUDGET,
        max_workers: int = WORKER_THREADS,
    ):
        """
        Args:
            cache: CountCache 实例，None 表示不缓存
            time_budget: 单次计数的墙钟预算（秒），None 表示不限时
            max_workers: 并行进程数，1 为串行
        """
        self.cache = cache
        self.time_budget = time_budget
        self.max_workers = max(1, int(max_workers))

    def count(self, spec: MarginSpec) -> BigCount:
        return self.count_many([spec])[0]

    def count_many(self, specs: Sequence[MarginSpec]) -> List[BigCount]:
        """
        批量计数

        Returns:
            与 specs 一一对应的精确计数

        Raises:
            CountBudgetError: 任一计数超过时间预算
        """
        results: Dict[Tuple[int, int, int, int], BigCount] = {}
        pending: List[MarginSpec] = []
        for spec in specs:
            key = spec.canonical().key()
            if key in results or any(p.canonical().key() == key for p in pending):
                continue
            cached = self.cache.lookup(spec) if self.cache is not None else None
            if cached is not None:
                results[key] = cached
            else:
                pending.append(spec.canonical())

        if pending:
            logger.info(f"缓存命中 {len(results)} 个，需计算 {len(pending)} 个")
        if self.max_workers > 1 and len(pending) > 1:
            self._count_parallel(pending, results)
        else:
            for spec in pending:
                self._record(spec, self._count_one(spec), results)

        return [results[spec.canonical().key()] for spec in specs]

    def _count_one(self, spec: MarginSpec) -> BigCount:
        start = time.monotonic()
        value = timed_count(spec, self.time_budget)
        logger.info(f"M{spec.key()} 计算完成，用时 {time.monotonic() - start:.2f}s")
        return value

    def _count_parallel(self, pending: List[MarginSpec], results: Dict) -> None:
        with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {
                executor.submit(timed_count, spec, self.time_budget): spec
                for spec in pending
            }
            try:
                for future in as_completed(futures):
                    spec = futures[future]
                    self._record(spec, future.result(), results)
                    logger.info(f"M{spec.key()} 计算完成（并行）")
            except BaseException:
                for future in futures:
                    future.cancel()
                raise

    def _record(self, spec: MarginSpec, value: BigCount, results: Dict) -> None:
        results[spec.canonical().key()] = value
        if self.cache is not None:
            self.cache.store(spec, value)


# 默认服务：无缓存、不限时、串行
default_count_service = CountService(cache=None, time_budget=None, max_workers=1)
