"""
任意精度整数上的数论基础运算，供其余模块共享。

Python int 本身无位宽上限，63 位以上的分子分母（Table 2 第 5 行）无需特殊处理。
"""

from __future__ import annotations

import logging
import math

from .errors import DomainError

logger = logging.getLogger("rand_cf.numtheory")


def gcd(a: int, b: int) -> int:
    """最大公约数；两者同时为 0 时无定义。"""
    if a < 0 or b < 0:
        raise DomainError("gcd is defined here for non-negative integers only")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base^exp mod modulus。"""
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise DomainError("negative exponents are not supported")
    return pow(base, exp, modulus)


def multiplicative_order(base: int, modulus: int) -> int:
    """
    base 模 modulus 的乘法阶：最小的 k >= 1 使 base^k ≡ 1 (mod modulus)。

    逐次乘法搜索，阶的规模即迭代次数，适用于桌面规模的模数。

    Raises:
        DomainError: modulus < 2，或 gcd(base, modulus) != 1（阶无定义）
    """
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if math.gcd(base, modulus) != 1:
        raise DomainError(f"order of {base} modulo {modulus} is undefined (gcd != 1)")

    residue = base % modulus
    current = residue
    k = 1
    while current != 1:
        current = (current * residue) % modulus
        k += 1
    logger.debug(f"ord_{modulus}({base}) = {k}")
    return k


def is_prime(n: int) -> bool:
    """确定性试除，至 √n 为止。"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    limit = math.isqrt(n)
    for d in range(3, limit + 1, 2):
        if n % d == 0:
            return False
    return True


def is_primitive_root(base: int, prime_modulus: int) -> bool:
    """
    base 是否为素数 prime_modulus 的原根。

    prime_modulus 整除 base 时阶无定义，返回 False。

    Raises:
        DomainError: prime_modulus 不是素数
    """
    if not is_prime(prime_modulus):
        raise DomainError(f"{prime_modulus} is not prime")
    if base % prime_modulus == 0:
        return False
    return multiplicative_order(base, prime_modulus) == prime_modulus - 1


__all__ = [
    "gcd",
    "mod_pow",
    "multiplicative_order",
    "is_prime",
    "is_primitive_root",
]
