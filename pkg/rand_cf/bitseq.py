"""
二进制序列值类型。

第一个比特是整数取值时的最高位（MSB-first），没有小端选项。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .errors import BitParseError, DomainError


@dataclass(frozen=True, slots=True)
class BitString:
    """有限、有序、非空的二进制序列；不可变。"""

    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.bits:
            raise DomainError("a bit string needs at least one bit")
        for bit in self.bits:
            if bit not in (0, 1):
                raise DomainError(f"bits must be 0 or 1, got {bit!r}")

    @classmethod
    def parse(cls, text: str) -> "BitString":
        """从 ASCII '0'/'1' 文本解析，无分隔符。"""
        if not text:
            raise BitParseError(text, None)
        for index, char in enumerate(text):
            if char not in "01":
                raise BitParseError(text, index)
        return cls(tuple(1 if char == "1" else 0 for char in text))

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        """取 value 的 width 位 MSB-first 表示。"""
        if width < 1:
            raise DomainError(f"width must be positive, got {width}")
        if value < 0 or value >= 1 << width:
            raise DomainError(f"{value} does not fit in {width} bits")
        return cls(tuple((value >> shift) & 1 for shift in range(width - 1, -1, -1)))

    @classmethod
    def of(cls, bits: Iterable[int]) -> "BitString":
        return cls(tuple(bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __str__(self) -> str:
        return "".join("1" if bit else "0" for bit in self.bits)

    @property
    def value(self) -> int:
        result = 0
        for bit in self.bits:
            result = (result << 1) | bit
        return result

    @property
    def is_all_ones(self) -> bool:
        return all(self.bits)

    @property
    def is_all_zeros(self) -> bool:
        return not any(self.bits)

    def complement(self) -> "BitString":
        return BitString(tuple(1 - bit for bit in self.bits))

    def rotate_right(self, k: int) -> "BitString":
        """循环右移 k 位；负数左移。右移一位相当于分子在模 2^N - 1 下除以 2。"""
        k %= len(self.bits)
        if k == 0:
            return self
        return BitString(self.bits[-k:] + self.bits[:-k])

    def cyclic_shift_to(self, other: "BitString") -> int | None:
        """最小的 k >= 0 使 self.rotate_right(k) == other；不存在时返回 None。"""
        if len(self.bits) != len(other.bits):
            return None
        for k in range(len(self.bits)):
            if self.rotate_right(k) == other:
                return k
        return None


def parse_bits(text: str) -> BitString:
    return BitString.parse(text)


def value(s: BitString) -> int:
    return s.value


def complement(s: BitString) -> BitString:
    return s.complement()


def rotate_right(s: BitString, k: int) -> BitString:
    return s.rotate_right(k)


def cyclic_equivalent(a: BitString, b: BitString) -> int | None:
    return a.cyclic_shift_to(b)


def min_rotation(s: BitString) -> tuple[int, BitString]:
    """
    取值最小的循环移位及对应的右移量。

    同一周期序列的所有移位对应同一 D 序列的不同分子，最小者即最紧凑的生成分数。
    """
    best_k = 0
    best = s
    for k in range(1, len(s)):
        candidate = s.rotate_right(k)
        if candidate.value < best.value:
            best_k, best = k, candidate
    return best_k, best


__all__ = [
    "BitString",
    "parse_bits",
    "value",
    "complement",
    "rotate_right",
    "cyclic_equivalent",
    "min_rotation",
]
