"""
运输多面体体积工具 - 命令行入口

功能：
1. count    精确计数 M(m,s;n,t) 或任意边际
2. ehrhart  Ehrhart 伪多项式（插值、取值、网格外校验）
3. volume   精确体积（--exact）或渐近估计
4. estimate 渐近估计（计数 / 相对体积代理值 / 体积）
5. table1   Birkhoff 多面体估计精度对照表
6. hyp      计数估计适用条件检查

使用方法：
    PYTHONPATH=src python -m polyvol.main count --m 3 --s 2 --n 3 --t 2
    PYTHONPATH=src python -m polyvol.main volume --m 2 --n 2 --exact
    PYTHONPATH=src python -m polyvol.main table1 --max-n 5 --threads 4
"""

import argparse
import json
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from config.config import (
    COUNT_CACHE_FILE,
    COUNT_TIME_BUDGET,
    DEFAULT_FORMAT,
    DEFAULT_LOG_LEVEL,
    HYP_DEFAULT_A,
    HYP_DEFAULT_B,
    LOG_DIR,
    LOG_FILE,
    LOG_TO_FILE,
    OUTPUT_DIGITS,
    TABLE1_MAX_EXACT_N,
    TABLE1_MAX_N,
    TABLE1_PLOT_FILE,
    WORKER_THREADS,
)

from .analysis.table1 import STATUS_BUDGET, build_table1, load_actual_volumes, render_table1
from .asymptotics.estimates import (
    estimate_birkhoff_volume_log,
    estimate_count_log,
    estimate_rel_volume_proxy_log,
    estimate_volume_log,
    volume_condition,
)
from .asymptotics.hypothesis import hyp_margin
from .core.counter import count_margins_general
from .core.errors import (
    CacheCorruptionError,
    CacheLockedError,
    CountBudgetError,
    OracleBudgetError,
    PolyvolError,
)
from .core.margins import GeneralMargins, MarginSpec
from .core.oracle import brute_force_count
from .core.service import CountService
from .ehrhart.polynomial import (
    ehrhart_value,
    interpolate_ehrhart,
    relative_volume,
    verify_polynomial,
)
from .ehrhart.volume import absolute_volume
from .store.count_cache import CountCache
from .utils.logger import LEVEL_NAMES, get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_CACHE = 3


class UsageError(Exception):
    """命令行参数无法解析"""


class ParserExit(Exception):
    """--help 等请求解析器正常结束"""

    def __init__(self, status: int, text: str):
        super().__init__(text)
        self.status = status
        self.text = text


class _Parser(argparse.ArgumentParser):
    """解析失败或打印帮助时抛出异常而不是直接退出进程"""

    _help_text = ""

    def error(self, message: str):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")

    def print_help(self, file=None):
        self._help_text = self.format_help()

    def exit(self, status: int = 0, message: Optional[str] = None):
        raise ParserExit(status, self._help_text + (message or ""))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--cache', type=str, default=COUNT_CACHE_FILE,
                        help=f'计数缓存文件（默认: {COUNT_CACHE_FILE}）')
    common.add_argument('--no-cache', action='store_true', help='不读写计数缓存')
    common.add_argument('--time-budget', type=float, default=COUNT_TIME_BUDGET,
                        help='单次精确计数的墙钟预算（秒），0 表示不限时')
    common.add_argument('--threads', type=int, default=WORKER_THREADS,
                        help='并行计数的进程数')
    common.add_argument('--format', choices=['text', 'csv', 'json'], default=DEFAULT_FORMAT,
                        help='输出格式')
    common.add_argument('--digits', type=int, default=OUTPUT_DIGITS,
                        help='实数输出的有效数字位数')
    common.add_argument('--log-level', type=str.upper, default=DEFAULT_LOG_LEVEL, choices=LEVEL_NAMES,
                        help='日志级别（DEBUG/INFO/WARNING/ERROR）')

    parser = _Parser(prog='polyvol', description='运输多面体体积：精确计数与渐近估计')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('count', parents=[common], help='精确计数 M(m,s;n,t)')
    p.add_argument('--m', type=int)
    p.add_argument('--s', type=int)
    p.add_argument('--n', type=int)
    p.add_argument('--t', type=int)
    p.add_argument('--rows', type=str, help='任意行和，如 2,1')
    p.add_argument('--cols', type=str, help='任意列和，如 1,1,1')
    p.add_argument('--oracle', action='store_true', help='同时用暴力枚举核对')

    p = sub.add_parser('ehrhart', parents=[common], help='Ehrhart 伪多项式')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--z', type=int, help='只计算 H(z)')
    p.add_argument('--verify', action='store_true', help='在网格外的点上校验')

    p = sub.add_parser('volume', parents=[common], help='体积（精确或估计）')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--exact', action='store_true', help='通过 Ehrhart 插值计算精确体积')

    p = sub.add_parser('estimate', parents=[common], help='渐近估计')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--s', type=int)
    p.add_argument('--t', type=int)
    p.add_argument('--lambda-mult', type=int, help='相对体积代理值：z = lambda_mult·z0')
    p.add_argument('--a', type=float, default=HYP_DEFAULT_A, help='适用条件常数 a')

    p = sub.add_parser('table1', parents=[common], help='Birkhoff 多面体估计精度对照表')
    p.add_argument('--max-n', type=int, default=TABLE1_MAX_N)
    p.add_argument('--max-exact-n', type=int, default=TABLE1_MAX_EXACT_N)
    p.add_argument('--actual-file', type=str, help='外部精确体积 CSV（n,volume）')
    p.add_argument('--plot', type=str, nargs='?', const=TABLE1_PLOT_FILE,
                   help=f'输出比值折线图（不带路径时写入 {TABLE1_PLOT_FILE}）')

    p = sub.add_parser('hyp', parents=[common], help='计数估计适用条件检查')
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--lambda', dest='lam', type=str, default='1', help='密度 λ（可写分数）')
    p.add_argument('--a', type=float, default=HYP_DEFAULT_A)
    p.add_argument('--b', type=float, default=HYP_DEFAULT_B)

    return parser


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def _dump(payload, fmt: str) -> Optional[str]:
    if fmt == 'json':
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    if fmt == 'csv':
        return pd.DataFrame([payload]).to_csv(index=False)
    return None


def _time_budget(args) -> Optional[float]:
    """--time-budget 为 0 或负数时不限时"""
    return args.time_budget if args.time_budget and args.time_budget > 0 else None


@contextmanager
def _count_service(args) -> Iterator[CountService]:
    cache = None if args.no_cache else CountCache(args.cache)
    try:
        yield CountService(cache=cache, time_budget=_time_budget(args), max_workers=args.threads)
    finally:
        if cache is not None:
            cache.close()


def _spec_from_args(args) -> MarginSpec:
    if None in (args.m, args.n):
        raise UsageError("需要 --m 与 --n\n")
    s, t = args.s, args.t
    if s is None and t is None:
        raise UsageError("需要 --s 或 --t\n")
    if t is None:
        if (args.m * s) % args.n:
            raise UsageError(f"ms = {args.m * s} 不能被 n = {args.n} 整除\n")
        t = args.m * s // args.n
    if s is None:
        if (args.n * t) % args.m:
            raise UsageError(f"nt = {args.n * t} 不能被 m = {args.m} 整除\n")
        s = args.n * t // args.m
    return MarginSpec(args.m, s, args.n, t)


def cmd_count(args) -> Tuple[int, str]:
    if args.rows is not None or args.cols is not None:
        if args.rows is None or args.cols is None:
            raise UsageError("--rows 与 --cols 必须同时给出\n")
        margins = GeneralMargins.parse(args.rows, args.cols)
        budget = _time_budget(args)
        deadline = None if budget is None else time.monotonic() + budget
        value = count_margins_general(margins, deadline=deadline)
        payload = {"rows": list(margins.row_sums), "cols": list(margins.col_sums), "count": str(value)}
    else:
        spec = _spec_from_args(args)
        margins = spec.to_general()
        with _count_service(args) as service:
            value = service.count(spec)
        payload = {"m": spec.m, "s": spec.s, "n": spec.n, "t": spec.t, "count": str(value)}

    if args.oracle:
        oracle = brute_force_count(margins)
        payload["oracle"] = str(oracle)
        payload["agree"] = oracle == value

    text = _dump(payload, args.format)
    if text is None:
        text = f"{value}\n"
        if args.oracle:
            text += f"oracle: {payload['oracle']} ({'agree' if payload['agree'] else 'MISMATCH'})\n"
    return EXIT_OK, text


def cmd_ehrhart(args) -> Tuple[int, str]:
    with _count_service(args) as service:
        if args.z is not None:
            value = ehrhart_value(args.m, args.n, args.z, service)
            payload = {"m": args.m, "n": args.n, "z": args.z, "H": str(value)}
            return EXIT_OK, _dump(payload, args.format) or f"H({args.z}) = {value}\n"

        poly = interpolate_ehrhart(args.m, args.n, service)
        verified = verify_polynomial(poly, service) if args.verify else None

    if args.format == 'csv':
        df = pd.DataFrame({
            'i': range(poly.degree + 1),
            'power': [poly.degree - i for i in range(poly.degree + 1)],
            'coeff': [str(c) for c in poly.coeffs],
        })
        return EXIT_OK, df.to_csv(index=False)

    payload = {
        "m": poly.m,
        "n": poly.n,
        "period": poly.z0,
        "degree": poly.degree,
        "coeffs": [str(c) for c in poly.coeffs],
        "normalized_volume": str(poly.normalized_volume),
    }
    if verified is not None:
        payload["verified"] = verified
    if args.format == 'json':
        return EXIT_OK, _dump(payload, 'json')

    lines = [f"T_{{{poly.m},{poly.n}}}: period z0 = {poly.z0}, degree d = {poly.degree}"]
    lines += [f"c_{i} = {c}" for i, c in enumerate(poly.coeffs)]
    lines.append(f"normalized volume = {poly.normalized_volume}")
    if verified is not None:
        lines.append(f"verify (z={(poly.degree + 1) * poly.z0}): {'true' if verified else 'false'}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_volume(args) -> Tuple[int, str]:
    digits = args.digits
    if args.exact:
        with _count_service(args) as service:
            poly = interpolate_ehrhart(args.m, args.n, service)
        nu = relative_volume(poly)
        vol = absolute_volume(args.m, args.n, nu)
        approx = float(vol)
        payload = {"m": args.m, "n": args.n, "nu": str(nu), "vol": vol.radical_form(),
                   "vol_approx": approx}
        text = _dump(payload, args.format)
        if text is None:
            vol_line = f"vol = {vol.radical_form()}"
            if vol.as_fraction() is None:
                vol_line += f" ≈ {_fmt(approx, digits)}"
            text = f"ν = {nu}\n{vol_line}\n"
        return EXIT_OK, text

    estimate = estimate_volume_log(args.m, args.n)
    payload = {"m": args.m, "n": args.n, "estimate_log": estimate.log_value,
               "estimate": estimate.to_scientific(digits)}
    if args.m == args.n:
        payload["birkhoff_log"] = estimate_birkhoff_volume_log(args.n).log_value
    text = _dump(payload, args.format)
    if text is None:
        text = (f"vol estimate = {estimate.to_scientific(digits)}\n"
                f"log = {_fmt(estimate.log_value, digits)}\n")
    return EXIT_OK, text


def cmd_estimate(args) -> Tuple[int, str]:
    digits = args.digits
    if args.s is not None or args.t is not None:
        spec = _spec_from_args(args)
        result = estimate_count_log(spec)
        payload = {"kind": "count", "m": spec.m, "s": spec.s, "n": spec.n, "t": spec.t}
    elif args.lambda_mult is not None:
        result = estimate_rel_volume_proxy_log(args.m, args.n, args.lambda_mult)
        payload = {"kind": "nu_proxy", "m": args.m, "n": args.n, "lambda_mult": args.lambda_mult}
    else:
        result = estimate_volume_log(args.m, args.n)
        payload = {"kind": "volume", "m": args.m, "n": args.n,
                   "condition": volume_condition(args.m, args.n, args.a)}
        if args.m == args.n:
            payload["birkhoff_log"] = estimate_birkhoff_volume_log(args.n).log_value
    payload["log"] = result.log_value
    payload["value"] = result.to_scientific(digits)

    text = _dump(payload, args.format)
    if text is None:
        text = f"{payload['kind']} estimate = {payload['value']}\nlog = {_fmt(result.log_value, digits)}\n"
        if "birkhoff_log" in payload:
            text += f"birkhoff log = {_fmt(payload['birkhoff_log'], digits)}\n"
    return EXIT_OK, text


def cmd_table1(args) -> Tuple[int, str]:
    actual = load_actual_volumes(args.actual_file) if args.actual_file else None
    with _count_service(args) as service:
        rows = build_table1(args.max_n, args.max_exact_n, service, actual)

    if args.plot:
        from .analysis.plotter import plot_ratio_chart
        path = plot_ratio_chart(rows, args.plot)
        logger.info(f"比值图已保存: {path}")

    text = render_table1(rows, args.format, args.digits)
    if any(row.status == STATUS_BUDGET for row in rows):
        if args.format == 'text':
            text += "PARTIAL: rows marked 'budget exceeded' were aborted\n"
        return EXIT_BUDGET, text
    return EXIT_OK, text


def cmd_hyp(args) -> Tuple[int, str]:
    try:
        lam = Fraction(args.lam)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"无法解析 --lambda: {args.lam}\n") from exc
    report = hyp_margin(args.m, args.n, lam, a=args.a, b=args.b)
    payload = {"m": args.m, "n": args.n, "lambda": str(lam), "a": report.a, "b": report.b,
               "lhs": report.lhs, "rhs": report.rhs, "satisfied": report.satisfied,
               "factor1": report.factor1, "factor2": report.factor2}
    text = _dump(payload, args.format)
    if text is None:
        d = args.digits
        text = (f"lhs = {_fmt(report.lhs, d)}\n"
                f"rhs = {_fmt(report.rhs, d)}\n"
                f"satisfied = {'true' if report.satisfied else 'false'}\n")
    return EXIT_OK, text


COMMANDS = {
    'count': cmd_count,
    'ehrhart': cmd_ehrhart,
    'volume': cmd_volume,
    'estimate': cmd_estimate,
    'table1': cmd_table1,
    'hyp': cmd_hyp,
}


def run_cli(argv: Sequence[str]) -> Tuple[int, str]:
    """
    执行一条命令

    Returns:
        (退出码, 输出文本)：0 成功，1 用法错误，2 超出计算预算，3 缓存损坏
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        return EXIT_USAGE, str(exc)
    except ParserExit as exc:
        return (EXIT_OK if exc.status == 0 else EXIT_USAGE), exc.text

    try:
        setup_logging(log_dir=LOG_DIR, log_file=LOG_FILE, level=args.log_level, file=LOG_TO_FILE)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return EXIT_USAGE, f"{parser.format_usage()}error: {exc}"
    except (CountBudgetError, OracleBudgetError) as exc:
        logger.warning(f"计算超出预算: {exc}")
        return EXIT_BUDGET, f"PARTIAL: computation budget exceeded: {exc}\n"
    except (CacheCorruptionError, CacheLockedError) as exc:
        logger.error(f"缓存异常: {exc}")
        return EXIT_CACHE, f"cache error: {exc}\n"
    except (PolyvolError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except OSError as exc:
        logger.error(f"文件读写失败: {exc}")
        return EXIT_USAGE, f"error: {exc}\n"


def main(argv: Optional[List[str]] = None) -> None:
    code, text = run_cli(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_BUDGET) else sys.stderr
    stream.write(text)
    sys.exit(code)


if __name__ == '__main__':
    main()
