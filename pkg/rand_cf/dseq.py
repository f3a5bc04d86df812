"""
D 序列：比特串与生成分数 m/q 之间的互相映射。

第 i 位（i 从 1 开始）为 (m * 2^i mod q) mod 2，即 m/q 二进制展开的第 i 位。
i 从 1 起算才能复现 5/7 -> 101；从 0 起算得到的是 110。
"""

from __future__ import annotations

import fractions
import logging
import math
import re
from dataclasses import dataclass

from .bitseq import BitString, min_rotation
from .errors import DomainError
from .numtheory import is_primitive_root, multiplicative_order

logger = logging.getLogger("rand_cf.dseq")

_FRACTION_RE = re.compile(r"(\d+)/(\d+)", re.ASCII)


@dataclass(frozen=True, slots=True)
class DFraction:
    """
    D 序列的生成分数。

    与 fractions.Fraction 不同，这里不自动约分：bits_to_fraction 的结果保持
    m/(2^N - 1) 的可见形式。
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise DomainError(f"denominator must be >= 1, got {self.denominator}")
        if self.numerator < 0:
            raise DomainError(f"numerator must be >= 0, got {self.numerator}")

    @classmethod
    def parse(cls, text: str) -> "DFraction":
        """解析 "m/q"（十进制，无空格）。"""
        match = _FRACTION_RE.fullmatch(text)
        if match is None:
            raise DomainError(f"expected a fraction of the form m/q, got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    @property
    def is_proper(self) -> bool:
        return self.numerator < self.denominator

    def reduced(self) -> "DFraction":
        g = math.gcd(self.numerator, self.denominator)
        return DFraction(self.numerator // g, self.denominator // g)

    def as_fraction(self) -> fractions.Fraction:
        return fractions.Fraction(self.numerator, self.denominator)


def bits_to_fraction(s: BitString) -> DFraction:
    """比特串 -> value(s) / (2^N - 1)，不约分。"""
    if s.is_all_ones:
        raise DomainError("an all-ones bit string maps to 1, not a proper fraction")
    return DFraction(s.value, (1 << len(s)) - 1)


def _check_odd_modulus(q: int) -> None:
    if q < 3:
        raise DomainError(f"denominator must be >= 3, got {q}")
    if q % 2 == 0:
        raise DomainError(f"denominator {q} is even; its binary expansion is not purely periodic")


def dseq_bits(m: int, q: int, length: int) -> BitString:
    """m/q 二进制展开的前 length 位。"""
    _check_odd_modulus(q)
    if m < 0 or m >= q:
        raise DomainError(f"numerator must satisfy 0 <= m < q, got {m}/{q}")
    if length < 1:
        raise DomainError(f"length must be positive, got {length}")

    bits = []
    residue = m
    for _ in range(length):
        residue = (residue << 1) % q
        bits.append(residue & 1)
    return BitString(tuple(bits))


def dseq_period(q: int) -> int:
    """2 模 q 的乘法阶，即 1/q 的二进制周期。"""
    _check_odd_modulus(q)
    return multiplicative_order(2, q)


def dseq_period_bits(m: int, q: int) -> BitString:
    """m/q 一个完整周期的 D 序列。"""
    return dseq_bits(m, q, dseq_period(q))


def is_maximal_dseq(q: int) -> bool:
    """素数 q 的 D 序列是否达到最大周期 q - 1（2 为 q 的原根）。"""
    return is_primitive_root(2, q)


def smallest_equivalent_fraction(s: BitString) -> DFraction:
    """同一循环序列的所有分子中最小者对应的分数。"""
    k, rotated = min_rotation(s)
    logger.debug(f"{s} 右移 {k} 位得到最小分子 {rotated.value}")
    return bits_to_fraction(rotated)


__all__ = [
    "DFraction",
    "bits_to_fraction",
    "dseq_bits",
    "dseq_period",
    "dseq_period_bits",
    "is_maximal_dseq",
    "smallest_equivalent_fraction",
]
