from __future__ import annotations

from typing import Any, Dict, Iterable, List

import orjson

from .types import MeasureBatchPayload, MeasureReportPayload

DEFAULT_SCHEMA_VERSION = 1

# orjson 原生支持的整数范围
_INT_MIN = -(1 << 63)
_INT_MAX = (1 << 64) - 1

_INT_FIELDS = ("numerator", "denominator", "r_cf", "r_auto_num", "r_auto_den")


def _wide_int(value: int) -> int | str:
    if _INT_MIN <= value <= _INT_MAX:
        return value
    return str(value)


def _sanitize(payload: MeasureReportPayload) -> Dict[str, Any]:
    out: Dict[str, Any] = dict(payload)
    for key in _INT_FIELDS:
        out[key] = _wide_int(out[key])
    out["cf"] = [_wide_int(a) for a in out["cf"]]
    return out


def _normalize(obj: Dict[str, Any]) -> MeasureReportPayload:
    missing = [key for key in ("sequence", "cf", *_INT_FIELDS) if key not in obj]
    if missing:
        raise ValueError(f"report payload is missing keys: {', '.join(missing)}")
    for key in _INT_FIELDS:
        obj[key] = int(obj[key])
    obj["cf"] = [int(a) for a in obj["cf"]]
    return obj  # type: ignore[return-value]


def dumps_report(report: MeasureReportPayload) -> bytes:
    """
    将单个度量报告序列化为 JSON bytes。
    """
    return orjson.dumps(_sanitize(report))


def dumps_reports(reports: Iterable[MeasureReportPayload]) -> bytes:
    """
    将批量报告序列化为 JSON bytes。
    """
    payload = {
        "schema_version": DEFAULT_SCHEMA_VERSION,
        "items": [_sanitize(report) for report in reports],
    }
    return orjson.dumps(payload)


def loads_report(data: bytes | str) -> MeasureReportPayload:
    """
    反序列化单个报告。
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    return _normalize(orjson.loads(data))


def loads_reports(data: bytes | str) -> List[MeasureReportPayload]:
    """
    反序列化批量报告。
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    obj: MeasureBatchPayload = orjson.loads(data)
    version = obj.get("schema_version", DEFAULT_SCHEMA_VERSION)
    if version != DEFAULT_SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version={version}")
    return [_normalize(item) for item in obj.get("items", [])]  # type: ignore[arg-type]


__all__ = [
    "DEFAULT_SCHEMA_VERSION",
    "dumps_report",
    "dumps_reports",
    "loads_report",
    "loads_reports",
]
