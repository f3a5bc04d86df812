"""
Fibonacci（外部异或）LFSR 生成的最大长度 PN 序列。

特征多项式 x^r + ... + 1 的非首项指数 e 即抽头：a_{n+r} = XOR_{e < r} a_{n+e}。
输出为寄存器内容按生成顺序排列，前 r 位即种子本身。
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Tuple

from .bitseq import BitString
from .errors import CapabilityError, DomainError

logger = logging.getLogger("rand_cf.lfsr")

MAX_ENUMERATION_DEGREE = 24
_SLOW_DEGREE = 20

_TERM_RE = re.compile(r"^(?:1|x|x\^(\d+))$", re.ASCII)

# 种子即 a_0 .. a_{r-1}，与 BitString 同构
LfsrSeed = BitString


@dataclass(frozen=True, slots=True)
class TapPolynomial:
    """二元特征多项式，按降序保存非零系数的指数。"""

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        exps = self.exponents
        if len(set(exps)) != len(exps):
            raise DomainError(f"exponents must be distinct, got {list(exps)}")
        if list(exps) != sorted(exps, reverse=True):
            raise DomainError(f"exponents must be in descending order, got {list(exps)}")
        if not exps or exps[-1] != 0:
            raise DomainError("characteristic polynomial needs a constant term (exponent 0)")
        if exps[0] < 2:
            raise DomainError(f"degree must be >= 2, got {exps[0]}")

    @classmethod
    def of(cls, *exponents: int) -> "TapPolynomial":
        return cls(tuple(sorted(set(exponents), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "TapPolynomial":
        """
        解析三种文本形式，统一为指数形式：

        - 指数列表 "6,1,0"
        - 系数向量 "1000011"（最高次在前）
        - 代数式 "x^6+x+1"
        """
        text = text.strip().replace(" ", "")
        if not text:
            raise DomainError("empty polynomial")
        if "x" in text:
            exponents = []
            for term in text.split("+"):
                match = _TERM_RE.match(term)
                if match is None:
                    raise DomainError(f"cannot parse polynomial term {term!r}")
                if term == "1":
                    exponents.append(0)
                elif term == "x":
                    exponents.append(1)
                else:
                    exponents.append(int(match.group(1)))
        elif "," in text:
            try:
                exponents = [int(part) for part in text.split(",")]
            except ValueError as exc:
                raise DomainError(f"cannot parse exponent list {text!r}") from exc
        elif set(text) <= {"0", "1"} and len(text) >= 3:
            degree = len(text) - 1
            exponents = [degree - i for i, char in enumerate(text) if char == "1"]
            if text[0] != "1":
                raise DomainError("coefficient vector must start with the leading 1")
        else:
            raise DomainError(f"unrecognised polynomial {text!r}")

        if len(set(exponents)) != len(exponents):
            raise DomainError(f"repeated exponent in {text!r}")
        if any(e < 0 for e in exponents):
            raise DomainError(f"negative exponent in {text!r}")
        return cls(tuple(sorted(exponents, reverse=True)))

    @property
    def degree(self) -> int:
        return self.exponents[0]

    @property
    def taps(self) -> Tuple[int, ...]:
        return self.exponents[1:]

    def __str__(self) -> str:
        terms = []
        for e in self.exponents:
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append("x")
            else:
                terms.append(f"x^{e}")
        return "+".join(terms)


def default_seed(degree: int) -> LfsrSeed:
    """种子 00..01。"""
    return BitString.from_int(1, degree)


def _check_seed(poly: TapPolynomial, seed: LfsrSeed) -> None:
    if len(seed) != poly.degree:
        raise DomainError(f"seed length {len(seed)} does not match polynomial degree {poly.degree}")
    if seed.is_all_zeros:
        raise DomainError("all-zero seed is a fixed point of the register")


def pn_sequence(poly: TapPolynomial, seed: LfsrSeed, length: int) -> BitString:
    """按递推关系生成 a_0 .. a_{length-1}。"""
    _check_seed(poly, seed)
    if length < 1:
        raise DomainError(f"length must be positive, got {length}")

    taps = poly.taps
    out = list(seed.bits)
    n = 0
    while len(out) < length:
        bit = 0
        for e in taps:
            bit ^= out[n + e]
        out.append(bit)
        n += 1
    return BitString(tuple(out[:length]))


def _check_degree(poly: TapPolynomial) -> None:
    if poly.degree > MAX_ENUMERATION_DEGREE:
        raise CapabilityError(
            f"degree {poly.degree} exceeds the supported state enumeration limit {MAX_ENUMERATION_DEGREE}"
        )
    if poly.degree > _SLOW_DEGREE:
        logger.warning(f"枚举 {poly.degree} 阶寄存器的状态周期，耗时可能较长")


def lfsr_period(poly: TapPolynomial) -> int:
    """从种子 00..01 出发，迭代到状态重复为止的周期长度。"""
    _check_degree(poly)
    r = poly.degree
    # 状态的第 j 位保存 a_{n+j}
    mask = 0
    for e in poly.taps:
        mask |= 1 << e
    start = 1 << (r - 1)
    state = start
    period = 0
    while True:
        feedback = (state & mask).bit_count() & 1
        state = (state >> 1) | (feedback << (r - 1))
        period += 1
        if state == start:
            break
    logger.debug(f"{poly} 的周期为 {period}")
    return period


def is_maximal(poly: TapPolynomial) -> bool:
    return lfsr_period(poly) == (1 << poly.degree) - 1


def find_seed(poly: TapPolynomial, target: BitString) -> LfsrSeed | None:
    """
    找到使 pn_sequence(poly, seed, len(target)) == target 的种子。

    寄存器状态即输出窗口，候选种子只能是 target 的前 r 位。
    """
    r = poly.degree
    if len(target) < r:
        return None
    seed = BitString(target.bits[:r])
    if seed.is_all_zeros:
        return None
    if pn_sequence(poly, seed, len(target)) == target:
        return seed
    return None


__all__ = [
    "LfsrSeed",
    "MAX_ENUMERATION_DEGREE",
    "TapPolynomial",
    "default_seed",
    "pn_sequence",
    "lfsr_period",
    "is_maximal",
    "find_seed",
]
