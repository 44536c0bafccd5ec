"""
Birkhoff 多面体体积估计精度对照表
对 n = 1..max_n 比较渐近估计与精确体积，给出 estimate/actual 比值
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

import pandas as pd

from config.config import OUTPUT_DIGITS, TABLE1_MAX_EXACT_N

from ..asymptotics.estimates import estimate_birkhoff_volume_log
from ..asymptotics.logreal import LogReal
from ..core.errors import CountBudgetError
from ..core.service import CountService, default_count_service
from ..ehrhart.polynomial import interpolate_ehrhart, relative_volume
from ..ehrhart.volume import ScaledVolume, absolute_volume
from ..utils.logger import get_logger

logger = get_logger(__name__)

STATUS_OK = "ok"
STATUS_BUDGET = "budget exceeded"
STATUS_NO_EXACT = "no exact value"


@dataclass
class TableRow:
    """对照表的一行"""
    n: int
    estimate_log: LogReal
    exact_volume: Optional[ScaledVolume] = None
    ratio: Optional[float] = None
    source: str = ""
    status: str = STATUS_OK

    def attach_exact(self, volume: ScaledVolume, source: str) -> None:
        self.exact_volume = volume
        self.ratio = math.exp(self.estimate_log.log_value - volume.to_log().log_value)
        self.source = source

    def to_dict(self) -> Dict:
        exact = None
        if self.exact_volume is not None:
            exact = {
                "coeff": str(self.exact_volume.coeff),
                "m_exp2": self.exact_volume.m_exp2,
                "n_exp2": self.exact_volume.n_exp2,
                "radical": self.exact_volume.radical_form(),
                "log": self.exact_volume.to_log().log_value,
            }
        return {
            "n": self.n,
            "estimate_log": self.estimate_log.log_value,
            "exact_volume": exact,
            "ratio": self.ratio,
            "source": self.source,
            "status": self.status,
        }


def load_actual_volumes(path: str) -> Dict[int, Fraction]:
    """
    读取外部提供的精确体积文件

    文件为两列 CSV：n,volume；volume 可写作分数 (a/b) 或十进制小数。

    Returns:
        {n: vol(B_n)}
    """
    df = pd.read_csv(path, dtype=str, comment='#', skipinitialspace=True)
    missing = {'n', 'volume'} - set(df.columns)
    if missing:
        raise ValueError(f"体积文件缺少列 {sorted(missing)}: {path}")

    volumes: Dict[int, Fraction] = {}
    for idx, row in df.iterrows():
        try:
            n = int(row['n'])
            volume = Fraction(str(row['volume']).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"体积文件第 {idx + 2} 行无法解析: {exc}") from exc
        if volume <= 0:
            raise ValueError(f"体积文件第 {idx + 2} 行体积必须为正: {volume}")
        volumes[n] = volume
    logger.info(f"已读取 {len(volumes)} 个外部体积值: {path}")
    return volumes


def exact_birkhoff_volume(n: int, service: Optional[CountService] = None) -> ScaledVolume:
    """通过 Ehrhart 插值得到 vol(B_n) 的精确值"""
    poly = interpolate_ehrhart(n, n, service or default_count_service)
    return absolute_volume(n, n, relative_volume(poly))


def build_table1(
    max_n: int,
    max_exact_n: int = TABLE1_MAX_EXACT_N,
    service: Optional[CountService] = None,
    actual_volumes: Optional[Dict[int, Fraction]] = None,
) -> List[TableRow]:
    """
    生成对照表

    Args:
        max_n: 最大 n
        max_exact_n: 只对 n <= max_exact_n 做精确插值
        service: 计数服务（缓存/并行/时间预算）
        actual_volumes: 外部提供的精确体积，用于无法精确计算的行

    Returns:
        List[TableRow]：超预算的行标记为 budget exceeded，其余行照常输出
    """
    actual_volumes = actual_volumes or {}
    rows = []
    for n in range(1, max_n + 1):
        row = TableRow(n=n, estimate_log=estimate_birkhoff_volume_log(n))
        if n <= max_exact_n:
            try:
                row.attach_exact(exact_birkhoff_volume(n, service), "ehrhart")
            except CountBudgetError as exc:
                logger.warning(f"n={n} 精确体积超过时间预算，本行中止: {exc}")
                row.status = STATUS_BUDGET
        if row.exact_volume is None and n in actual_volumes:
            row.attach_exact(ScaledVolume(actual_volumes[n], 0, 0, n, n), "actual-file")
        if row.exact_volume is None and row.status == STATUS_OK:
            row.status = STATUS_NO_EXACT
        rows.append(row)
        logger.info(f"n={n} 完成，比值 {row.ratio}")
    return rows


def rows_to_dataframe(rows: List[TableRow], digits: int = OUTPUT_DIGITS) -> pd.DataFrame:
    """转换为便于展示的 DataFrame（数值按有效数字格式化为字符串）"""
    records = []
    for row in rows:
        records.append({
            'n': row.n,
            'estimate': row.estimate_log.to_scientific(digits),
            'exact_volume': row.exact_volume.radical_form() if row.exact_volume else '',
            'ratio': f"{row.ratio:.{digits}g}" if row.ratio is not None else '',
            'source': row.source,
            'status': row.status,
        })
    return pd.DataFrame(records, columns=['n', 'estimate', 'exact_volume', 'ratio', 'source', 'status'])


def render_table1(rows: List[TableRow], fmt: str = "text", digits: int = OUTPUT_DIGITS) -> str:
    """按 text / csv / json 输出对照表"""
    if fmt == "json":
        return json.dumps([row.to_dict() for row in rows], ensure_ascii=False, indent=2) + "\n"
    df = rows_to_dataframe(rows, digits)
    if fmt == "csv":
        return df.to_csv(index=False)
    return df.to_string(index=False) + "\n"
