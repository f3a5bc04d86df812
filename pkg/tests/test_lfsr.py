"""
测试 lfsr 模块：多项式解析、PN 序列生成、周期与种子反查
"""
from __future__ import annotations

import logging

import pytest

from rand_cf import CapabilityError, DomainError
from rand_cf.bitseq import BitString, cyclic_equivalent, parse_bits
from rand_cf.lfsr import TapPolynomial, default_seed, find_seed, is_maximal, lfsr_period, pn_sequence

# 原表 1 的打印值（阶数, 多项式, 分子）
PRINTED_NUMERATORS = [
    (2, "x^2+x+1", 5),
    (3, "x^3+x^2+1", 78),
    (4, "x^4+x^3+1", 18348),
    (5, "x^5+x^3+1", 1119559476),
]
DEGREE6_PRINTED = 4754309678505905152
DEGREE6_EXACT = 4754309678505904688


def _leading_one_seed(degree: int) -> BitString:
    return BitString.from_int(1 << (degree - 1), degree)


# ============================================================
# TapPolynomial
# ============================================================


class TestTapPolynomial:
    """测试特征多项式"""

    @pytest.mark.parametrize("text", ["6,1,0", "1000011", "x^6+x+1", "x^6 + x + 1", "0,1,6"])
    def test_three_textual_forms_agree(self, text):
        """测试三种文本形式解析为同一多项式"""
        poly = TapPolynomial.parse(text)
        assert poly.exponents == (6, 1, 0)
        assert poly.degree == 6
        assert poly.taps == (1, 0)

    def test_str(self):
        """测试代数式格式化"""
        assert str(TapPolynomial.of(3, 2, 0)) == "x^3+x^2+1"
        assert str(TapPolynomial.parse("6,1,0")) == "x^6+x+1"

    @pytest.mark.parametrize("text", ["", "x^3+x^2", "6,1", "x^2+y+1", "0111", "x^3+x^3+1", "1,0", "a,b,c"])
    def test_rejects_malformed(self, text):
        """测试非法多项式"""
        with pytest.raises(DomainError):
            TapPolynomial.parse(text)

    def test_direct_construction_validates(self):
        """测试构造时校验降序与常数项"""
        with pytest.raises(DomainError):
            TapPolynomial((0, 1, 3))
        with pytest.raises(DomainError):
            TapPolynomial((3, 1))


# ============================================================
# pn_sequence
# ============================================================


class TestPnSequence:
    """测试 PN 序列生成"""

    def test_seed_is_output_prefix(self):
        """测试前 r 位即种子"""
        poly = TapPolynomial.of(5, 3, 0)
        seed = parse_bits("10110")
        assert pn_sequence(poly, seed, 12).bits[:5] == seed.bits

    def test_default_seed(self):
        """测试默认种子 0..01"""
        assert str(default_seed(4)) == "0001"

    def test_degree3_from_default_seed(self):
        """测试默认种子生成 0011101，与 1001110 循环等价"""
        poly = TapPolynomial.parse("x^3+x^2+1")
        seq = pn_sequence(poly, default_seed(3), 7)
        assert str(seq) == "0011101"
        assert cyclic_equivalent(seq, parse_bits("1001110")) is not None

    @pytest.mark.parametrize("degree,poly_text,printed", PRINTED_NUMERATORS)
    def test_printed_numerators_exact(self, degree, poly_text, printed):
        """测试种子 10..0 精确复现 2..5 阶的打印分子"""
        poly = TapPolynomial.parse(poly_text)
        seq = pn_sequence(poly, _leading_one_seed(degree), (1 << degree) - 1)
        assert seq.value == printed

    @pytest.mark.parametrize("degree,poly_text,printed", PRINTED_NUMERATORS)
    def test_printed_numerators_cyclic_from_default_seed(self, degree, poly_text, printed):
        """测试默认种子的输出与打印值循环等价"""
        poly = TapPolynomial.parse(poly_text)
        period = (1 << degree) - 1
        seq = pn_sequence(poly, default_seed(degree), period)
        assert cyclic_equivalent(seq, BitString.from_int(printed, period)) is not None

    def test_degree6_printed_value_is_rounded(self):
        """测试 6 阶打印分子是精确值的双精度舍入"""
        poly = TapPolynomial.parse("x^6+x^5+1")
        seq = pn_sequence(poly, _leading_one_seed(6), 63)
        assert seq.value == DEGREE6_EXACT
        assert seq.value != DEGREE6_PRINTED
        assert float(seq.value) == float(DEGREE6_PRINTED)
        assert DEGREE6_PRINTED - seq.value == 464

    def test_degree6_ones_positions(self):
        """测试 6 阶序列中 1 的位置"""
        poly = TapPolynomial.parse("x^6+x^5+1")
        seq = pn_sequence(poly, _leading_one_seed(6), 63)
        ones = [i for i, bit in enumerate(seq) if bit]
        assert ones == [
            0, 6, 7, 8, 9, 10, 11, 13, 15, 17, 18, 21, 22, 24, 25, 26,
            28, 29, 31, 34, 37, 38, 39, 43, 45, 46, 47, 48, 51, 53, 57, 58,
        ]

    def test_rejects_zero_seed(self):
        """测试全 0 种子"""
        with pytest.raises(DomainError, match="all-zero"):
            pn_sequence(TapPolynomial.of(3, 2, 0), parse_bits("000"), 7)

    def test_rejects_seed_length_mismatch(self):
        """测试种子长度与阶数不符"""
        with pytest.raises(DomainError):
            pn_sequence(TapPolynomial.of(3, 2, 0), parse_bits("01"), 7)

    def test_rejects_non_positive_length(self):
        """测试长度非正"""
        with pytest.raises(DomainError):
            pn_sequence(TapPolynomial.of(3, 2, 0), default_seed(3), 0)

    def test_windows_unique_for_maximal_polynomials(self, maximal_polynomials):
        """测试最大长度序列一周期内每个非零 r 位窗口恰好出现一次"""
        for degree, poly in maximal_polynomials.items():
            period = (1 << degree) - 1
            seq = pn_sequence(poly, default_seed(degree), period).bits
            doubled = seq + seq
            windows = {doubled[i:i + degree] for i in range(period)}
            assert len(windows) == period
            assert (0,) * degree not in windows

    def test_two_periods_repeat(self, maximal_polynomials):
        """测试生成两个周期时后半等于前半"""
        for degree, poly in maximal_polynomials.items():
            period = (1 << degree) - 1
            seq = pn_sequence(poly, default_seed(degree), 2 * period).bits
            assert seq[:period] == seq[period:]

    def test_balance(self, maximal_polynomials):
        """测试一周期内 1 比 0 多一个"""
        for degree, poly in maximal_polynomials.items():
            seq = pn_sequence(poly, default_seed(degree), (1 << degree) - 1)
            assert sum(seq) == 1 << (degree - 1)


# ============================================================
# 周期
# ============================================================


class TestLfsrPeriod:
    """测试状态周期"""

    def test_maximal_polynomials(self, maximal_polynomials):
        """测试本原多项式达到 2^r - 1"""
        for degree, poly in maximal_polynomials.items():
            assert lfsr_period(poly) == (1 << degree) - 1
            assert is_maximal(poly)

    def test_non_maximal(self):
        """测试非本原多项式的周期"""
        # x^4+x^2+1 = (x^2+x+1)^2
        poly = TapPolynomial.of(4, 2, 0)
        assert lfsr_period(poly) == 6
        assert not is_maximal(poly)

    def test_period_matches_generated_sequence(self):
        """测试与生成序列的周期一致"""
        poly = TapPolynomial.of(4, 2, 0)
        seq = pn_sequence(poly, default_seed(4), 12).bits
        assert seq[:6] == seq[6:]

    def test_capability_limit(self):
        """测试超过枚举上限时报错"""
        with pytest.raises(CapabilityError):
            lfsr_period(TapPolynomial.of(25, 3, 0))

    def test_large_degree_warns(self, caplog):
        """测试大阶数时记录警告"""
        caplog.set_level(logging.WARNING, logger="rand_cf.lfsr")
        # x^21+1 只是循环移位，周期为 21
        assert lfsr_period(TapPolynomial.of(21, 0)) == 21
        assert any(record.levelno == logging.WARNING for record in caplog.records)


# ============================================================
# find_seed
# ============================================================


class TestFindSeed:
    """测试种子反查"""

    def test_recovers_seed(self, maximal_polynomials):
        """测试从输出反查种子"""
        for degree, poly in maximal_polynomials.items():
            seed = BitString.from_int(5 % ((1 << degree) - 1) or 1, degree)
            target = pn_sequence(poly, seed, 3 * degree)
            assert find_seed(poly, target) == seed

    def test_printed_sequence(self, pn78):
        """测试 1001110 的种子为 100"""
        assert str(find_seed(TapPolynomial.of(3, 2, 0), pn78)) == "100"

    def test_no_seed(self):
        """测试不能由该多项式生成的串"""
        assert find_seed(TapPolynomial.of(3, 2, 0), parse_bits("1111111")) is None

    def test_target_shorter_than_degree(self):
        """测试目标串短于阶数"""
        assert find_seed(TapPolynomial.of(3, 2, 0), parse_bits("10")) is None

    def test_zero_prefix(self):
        """测试前缀全 0"""
        assert find_seed(TapPolynomial.of(3, 2, 0), parse_bits("0001110")) is None
