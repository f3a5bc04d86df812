from __future__ import annotations

from typing import List, NotRequired, Required, TypedDict

# ----------------------------
# 机器可读输出的 TypedDict
# ----------------------------


class MeasureReportPayload(TypedDict):
    """
    measure --json 的稳定 schema。

    精确有理数拆成分子分母两个整数，不以浮点数输出。
    超出 64 位的整数以十进制字符串序列化，加载时还原为 int。
    """

    sequence: str
    numerator: int
    denominator: int
    cf: List[int]
    r_cf: int
    r_auto_num: int
    r_auto_den: int


class MeasureBatchPayload(TypedDict, total=False):
    schema_version: Required[int]
    items: Required[List[MeasureReportPayload]]


class ScanRowPayload(TypedDict, total=False):
    m: Required[int]
    R: Required[int]
    binary: NotRequired[str]
    cf: NotRequired[str]


__all__ = ["MeasureReportPayload", "MeasureBatchPayload", "ScanRowPayload"]
