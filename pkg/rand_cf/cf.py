"""
真分数的连分数展开与 R 随机性度量。

对 (0,1) 内的值，整数部分 0 不计入：x = 1/(a_1 + 1/(a_2 + ... + 1/a_k))，R = k。
展开只输出欧几里得算法给出的规范形式（末项 >= 2），因此 R 有唯一定义。
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Tuple

from .bitseq import BitString
from .dseq import DFraction, bits_to_fraction
from .errors import DomainError

_CF_TEXT_RE = re.compile(r"^\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]$", re.ASCII)


@dataclass(frozen=True, slots=True)
class ContinuedFraction:
    """部分商序列 [a_1, ..., a_k]；空序列表示 0。"""

    quotients: Tuple[int, ...]

    def __post_init__(self) -> None:
        for a in self.quotients:
            if a < 1:
                raise DomainError(f"partial quotients must be positive, got {a}")

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        """解析 "[a1, a2, ..., ak]"。"""
        match = _CF_TEXT_RE.match(text.strip())
        if match is None:
            raise DomainError(f"expected a continued fraction like [1, 2, 2], got {text!r}")
        body = match.group(1)
        if body is None:
            return cls(())
        return cls(tuple(int(part) for part in body.split(",")))

    def __len__(self) -> int:
        return len(self.quotients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.quotients)

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.quotients) + "]"

    @property
    def r(self) -> int:
        return len(self.quotients)

    @property
    def is_canonical(self) -> bool:
        return not self.quotients or self.quotients[-1] >= 2


def cf_expand(f: DFraction) -> ContinuedFraction:
    """
    对 (q, m) 执行欧几里得算法，记录各步的商。

    公因子不改变商序列，因此 f 无需预先约分。
    """
    m, q = f.numerator, f.denominator
    if m >= q:
        raise DomainError(f"value must be in [0,1), got {f}")
    quotients = []
    while m:
        a, rem = divmod(q, m)
        quotients.append(a)
        q, m = m, rem
    return ContinuedFraction(tuple(quotients))


def cf_fold(c: ContinuedFraction | Tuple[int, ...] | list[int]) -> DFraction:
    """
    从末项向前折叠回分数。

    相邻渐近分数互素，结果天然是既约形式；折叠接受任意正整数部分商。
    """
    quotients = c.quotients if isinstance(c, ContinuedFraction) else tuple(c)
    num, den = 0, 1
    for a in reversed(quotients):
        if a < 1:
            raise DomainError(f"partial quotients must be positive, got {a}")
        num, den = den, a * den + num
    return DFraction(num, den)


def r_measure_fraction(f: DFraction) -> int:
    """R = 规范连分数的分量个数。"""
    if f.numerator == 0:
        raise DomainError("R is undefined for the zero fraction")
    return len(cf_expand(f))


def r_measure_bits(s: BitString) -> int:
    if s.is_all_zeros:
        raise DomainError(f"R is undefined for the all-zeros sequence {s} (fraction 0)")
    if s.is_all_ones:
        raise DomainError(f"R is undefined for the all-ones sequence {s} (fraction 1)")
    return r_measure_fraction(bits_to_fraction(s))


__all__ = [
    "ContinuedFraction",
    "cf_expand",
    "cf_fold",
    "r_measure_fraction",
    "r_measure_bits",
]
