from __future__ import annotations

import logging
import os
from dataclasses import asdict, dataclass
from typing import Any, Dict, Mapping

logger = logging.getLogger("rand_cf.config")

ENV_NO_COLOR = "RAND_CF_NO_COLOR"
ENV_WORKERS = "RAND_CF_WORKERS"

DEFAULT_CHUNK_SIZE = 4096


@dataclass
class OutputOptions:
    """文本输出配置"""
    color: bool = False
    json: bool = False

    def to_dict(self) -> Dict[str, bool]:
        """转换为字典格式"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "OutputOptions":
        """从字典创建配置对象"""
        return cls(color=bool(data.get("color", False)), json=bool(data.get("json", False)))

    @classmethod
    def from_env(
        cls, *, is_tty: bool, env: Mapping[str, str] | None = None, json: bool = False
    ) -> "OutputOptions":
        """
        根据环境变量决定是否着色；json 由命令行开关传入。

        设置了 RAND_CF_NO_COLOR（非空）或输出不是终端时不着色。
        """
        env = os.environ if env is None else env
        return cls(color=is_tty and not env.get(ENV_NO_COLOR), json=json)


@dataclass
class ScanOptions:
    """扫描配置：并行度、分块大小、是否输出 binary,cf 列"""
    workers: int = 1
    chunk_size: int = DEFAULT_CHUNK_SIZE
    wide: bool = False

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.chunk_size < 1:
            raise ValueError(f"chunk_size must be >= 1, got {self.chunk_size}")

    def to_dict(self) -> Dict[str, int | bool]:
        """转换为字典格式"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ScanOptions":
        """从字典创建配置对象"""
        return cls(
            workers=int(data.get("workers", 1)),
            chunk_size=int(data.get("chunk_size", DEFAULT_CHUNK_SIZE)),
            wide=bool(data.get("wide", False)),
        )

    @classmethod
    def from_env(cls, env: Mapping[str, str] | None = None) -> "ScanOptions":
        """读取 RAND_CF_WORKERS；非法值记录警告后回退为 1。"""
        env = os.environ if env is None else env
        raw = env.get(ENV_WORKERS, "")
        workers = 1
        if raw:
            try:
                workers = max(1, int(raw))
            except ValueError:
                logger.warning(f"忽略无效的 {ENV_WORKERS}={raw!r}")
        return cls(workers=workers)


__all__ = ["ENV_NO_COLOR", "ENV_WORKERS", "DEFAULT_CHUNK_SIZE", "OutputOptions", "ScanOptions"]
