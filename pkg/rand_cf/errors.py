from __future__ import annotations


class RandCFError(Exception):
    """rand_cf 所有异常的基类。"""


class DomainError(RandCFError, ValueError):
    """输入超出运算定义域（分母为偶数、分数非真分数、全 0/全 1 序列等）。"""


class BitParseError(DomainError):
    """
    比特串解析失败。

    Attributes:
        text: 原始输入
        index: 出错字符的位置；空输入时为 None
    """

    def __init__(self, text: str, index: int | None) -> None:
        if index is None:
            detail = "empty bit string"
        else:
            detail = f"invalid bit {text[index]!r} at index {index}"
        super().__init__(detail)
        self.text = text
        self.index = index


class CapabilityError(RandCFError):
    """请求超出本实现支持的规模（例如 LFSR 阶数过大）。"""


class UsageError(RandCFError):
    """命令行层面的用法错误，对应退出码 2。"""


__all__ = [
    "RandCFError",
    "DomainError",
    "BitParseError",
    "CapabilityError",
    "UsageError",
]
