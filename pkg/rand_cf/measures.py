"""
对照度量与批量扫描：基于周期自相关的 R(x)、按分母扫描 CF 长度、综合报告。
"""

from __future__ import annotations

import csv
import fractions
import itertools
import logging
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Deque, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from .bitseq import BitString
from .cf import ContinuedFraction, cf_expand
from .config import ScanOptions
from .dseq import DFraction, bits_to_fraction, dseq_bits, dseq_period
from .errors import DomainError
from .types import MeasureReportPayload, ScanRowPayload

logger = logging.getLogger("rand_cf.measures")

_ScanTask = Tuple[int, Tuple[int, ...], bool, int | None]
_RawRow = Tuple[int, int, str | None, str | None]


# ----------------------------
# 自相关
# ----------------------------


def _bipolar(s: BitString) -> np.ndarray:
    """0 -> -1, 1 -> +1"""
    return np.where(np.asarray(s.bits, dtype=np.int8) == 1, 1, -1).astype(np.int64)


def _correlation_sum(b: np.ndarray, k: int) -> int:
    return int(np.dot(b, np.roll(b, -k)))


def autocorrelation(s: BitString, k: int) -> fractions.Fraction:
    """
    周期自相关 C(k) = (1/N) * sum_i b_i * b_{(i+k) mod N}，b 为 ±1 映射；C(0) = 1。

    先在整数上求和再构造有理数，结果精确。
    """
    n = len(s)
    return fractions.Fraction(_correlation_sum(_bipolar(s), k % n), n)


def r_autocorr(s: BitString) -> fractions.Fraction:
    """R(x) = 1 - sum_{k=1}^{N-1} |C(k)| / (N - 1)，取值于 [0, 1]。"""
    n = len(s)
    if n < 2:
        raise DomainError("autocorrelation measure needs at least 2 bits")
    b = _bipolar(s)
    total = sum(abs(_correlation_sum(b, k)) for k in range(1, n))
    return 1 - fractions.Fraction(total, n * (n - 1))


# ----------------------------
# 综合报告
# ----------------------------


@dataclass(frozen=True)
class MeasureReport:
    """一条序列的分数、连分数、两种度量与周期提示"""
    sequence: BitString
    fraction: DFraction
    cf: ContinuedFraction
    r_cf: int
    r_auto: fractions.Fraction
    period_hint: int | None = None

    def to_payload(self) -> MeasureReportPayload:
        return {
            "sequence": str(self.sequence),
            "numerator": self.fraction.numerator,
            "denominator": self.fraction.denominator,
            "cf": list(self.cf.quotients),
            "r_cf": self.r_cf,
            "r_auto_num": self.r_auto.numerator,
            "r_auto_den": self.r_auto.denominator,
        }


def measure_report(s: BitString) -> MeasureReport:
    """
    计算完整报告。

    period_hint 为约分后分母的 D 序列周期，即该循环串的最小周期；
    约分后分母整除 2^N - 1，故 2 的阶不超过 N。
    """
    if s.is_all_zeros or s.is_all_ones:
        raise DomainError(f"cannot measure the degenerate sequence {s} (all bits equal)")
    fraction = bits_to_fraction(s)
    cf = cf_expand(fraction)
    reduced_q = fraction.reduced().denominator
    period_hint = dseq_period(reduced_q) if reduced_q >= 3 else None
    return MeasureReport(
        sequence=s,
        fraction=fraction,
        cf=cf,
        r_cf=len(cf),
        r_auto=r_autocorr(s),
        period_hint=period_hint,
    )


# ----------------------------
# CF 长度扫描
# ----------------------------


@dataclass(frozen=True)
class ScanRow:
    """扫描结果的一行；bits/cf 仅在 wide 模式下填充"""
    m: int
    r: int
    bits: str | None = None
    cf: str | None = None

    def to_payload(self) -> ScanRowPayload:
        payload: ScanRowPayload = {"m": self.m, "R": self.r}
        if self.bits is not None:
            payload["binary"] = self.bits
        if self.cf is not None:
            payload["cf"] = self.cf
        return payload


def _scan_chunk(task: _ScanTask) -> List[_RawRow]:
    """工作进程入口：只返回普通元组，避免跨进程传递自定义对象。"""
    q, numerators, wide, period = task
    rows: List[_RawRow] = []
    for m in numerators:
        cf = cf_expand(DFraction(m, q))
        if wide:
            bits = str(dseq_bits(m, q, period)) if period is not None else ""
            rows.append((m, len(cf), bits, str(cf)))
        else:
            rows.append((m, len(cf), None, None))
    return rows


def _chunked(values: Iterable[int], size: int) -> Iterator[Tuple[int, ...]]:
    it = iter(values)
    while chunk := tuple(itertools.islice(it, size)):
        yield chunk


def iter_cf_lengths(
    q: int,
    numerators: Sequence[int] | None = None,
    options: ScanOptions | None = None,
) -> Iterator[ScanRow]:
    """
    逐行产出 (m, R)，顺序与输入一致。

    默认扫描 m = 1 .. q-1；显式给出的 m = 0 得到空连分数，R = 0。
    多进程模式下同时在途的分块数有上限，按提交顺序取回结果，保证输出有序。
    """
    options = options or ScanOptions()
    if q < 3:
        raise DomainError(f"denominator must be >= 3, got {q}")
    if numerators is None:
        source: Iterable[int] = range(1, q)
        count = q - 1
    else:
        bad = [m for m in numerators if m < 0 or m >= q]
        if bad:
            raise DomainError(f"numerator {bad[0]} is outside [0, {q})")
        source = numerators
        count = len(numerators)

    period = None
    if options.wide and q % 2 == 1:
        period = dseq_period(q)

    tasks = ((q, chunk, options.wide, period) for chunk in _chunked(source, options.chunk_size))
    logger.debug(f"扫描分母 {q}: {count} 行, workers={options.workers}")
    return _run_scan(tasks, options.workers)


def _run_scan(tasks: Iterator[_ScanTask], workers: int) -> Iterator[ScanRow]:
    if workers == 1:
        for task in tasks:
            for raw in _scan_chunk(task):
                yield ScanRow(*raw)
        return

    # 最多 2 * workers 个分块在途，按提交顺序取回
    window = 2 * workers
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending: Deque[Future[List[_RawRow]]] = deque(
            pool.submit(_scan_chunk, task) for task in itertools.islice(tasks, window)
        )
        while pending:
            rows = pending.popleft().result()
            for task in itertools.islice(tasks, 1):
                pending.append(pool.submit(_scan_chunk, task))
            for raw in rows:
                yield ScanRow(*raw)


def scan_cf_lengths(
    q: int,
    numerators: Sequence[int] | None = None,
    options: ScanOptions | None = None,
) -> List[Tuple[int, int]]:
    """按分母 q 扫描 CF 长度，返回 [(m, R), ...]。"""
    return [(row.m, row.r) for row in iter_cf_lengths(q, numerators, options)]


def write_scan_csv(rows: Iterable[ScanRow], stream: IO[str], *, wide: bool = False) -> int:
    """以 CSV（表头 m,R[,binary,cf]，LF 换行）写出，返回行数。"""
    fieldnames = ["m", "R", "binary", "cf"] if wide else ["m", "R"]
    writer = csv.DictWriter(stream, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    written = 0
    for row in rows:
        writer.writerow(row.to_payload())
        written += 1
    return written


__all__ = [
    "autocorrelation",
    "r_autocorr",
    "MeasureReport",
    "measure_report",
    "ScanRow",
    "iter_cf_lengths",
    "scan_cf_lengths",
    "write_scan_csv",
]
