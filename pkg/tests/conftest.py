"""
Pytest 配置和共享 fixtures
"""
from __future__ import annotations

from typing import Callable, Dict, Iterator

import pytest

from rand_cf import BitString, TapPolynomial


# ============================================================
# 通用 Fixtures
# ============================================================

# 各阶一个已知的本原多项式（2..10 阶）
MAXIMAL_POLYNOMIALS: Dict[int, TapPolynomial] = {
    2: TapPolynomial.of(2, 1, 0),
    3: TapPolynomial.of(3, 2, 0),
    4: TapPolynomial.of(4, 3, 0),
    5: TapPolynomial.of(5, 3, 0),
    6: TapPolynomial.of(6, 5, 0),
    7: TapPolynomial.of(7, 6, 0),
    8: TapPolynomial.of(8, 6, 5, 4, 0),
    9: TapPolynomial.of(9, 5, 0),
    10: TapPolynomial.of(10, 7, 0),
}


def _all_bitstrings(width: int) -> Iterator[BitString]:
    for v in range(1 << width):
        yield BitString.from_int(v, width)


@pytest.fixture
def all_bitstrings() -> Callable[[int], Iterator[BitString]]:
    """枚举给定长度的全部比特串"""
    return _all_bitstrings


@pytest.fixture
def pn78() -> BitString:
    """3 阶 PN 序列 1001110，对应 78/127"""
    return BitString.parse("1001110")


@pytest.fixture
def maximal_polynomials() -> Dict[int, TapPolynomial]:
    """2..10 阶本原多项式"""
    return dict(MAXIMAL_POLYNOMIALS)


@pytest.fixture
def no_color_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """清理会影响输出的环境变量"""
    monkeypatch.delenv("RAND_CF_NO_COLOR", raising=False)
    monkeypatch.delenv("RAND_CF_WORKERS", raising=False)
