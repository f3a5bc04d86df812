"""
重新计算并排版原始结果表。

每张表由打印值重新计算；与打印值不一致的单元格以 *k 标记并在脚注中给出两者，
不做静默修正。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from ..bitseq import BitString, cyclic_equivalent
from ..cf import ContinuedFraction, cf_expand
from ..dseq import DFraction, bits_to_fraction, dseq_bits
from ..errors import UsageError
from ..lfsr import TapPolynomial, lfsr_period, pn_sequence
from .render import Renderer

logger = logging.getLogger("rand_cf.cli.tables")

TABLE_IDS = (1, 2, 3, 4, 5)

# ----------------------------
# 打印值
# ----------------------------

# (阶数, 多项式, 分子, 分母)
TABLE1: Tuple[Tuple[int, str, int, int], ...] = (
    (2, "x^2+x+1", 5, 7),
    (3, "x^3+x^2+1", 78, 127),
    (4, "x^4+x^3+1", 18348, 32767),
    (5, "x^5+x^3+1", 1119559476, 2147483647),
    (6, "x^6+x^5+1", 4754309678505905152, 9223372036854775807),
)

# (多项式, 分子, 分母, 连分数)
TABLE2: Tuple[Tuple[str, int, int, Tuple[int, ...]], ...] = (
    ("x^2+x+1", 5, 7, (1, 2, 2)),
    ("x^3+x^2+1", 78, 127, (1, 1, 1, 1, 2, 4, 2)),
    ("x^4+x^3+1", 18348, 32767, (1, 1, 3, 1, 2, 34, 7, 1, 2)),
    ("x^5+x^3+1", 1119559476, 2147483647, (1, 11, 4, 1, 1, 2, 11, 12, 6, 12, 1, 16, 2, 2, 3)),
    (
        "x^6+x^5+1",
        4754309678505905152,
        9223372036854775807,
        (1, 1, 15, 1, 3, 174, 1, 15, 17, 1, 1, 1, 1, 23, 1, 1, 5, 1, 4, 34, 1, 1, 1, 1, 1, 2, 1, 18, 3, 1, 1, 7, 1, 1, 84),
    ),
)

# (分子, 连分数, R, 二进制串)，分母均为 127
TABLE3: Tuple[Tuple[int, Tuple[int, ...], int, str], ...] = (
    (3, (42, 3), 2, "0000011"),
    (7, (18, 7), 2, "0000111"),
    (13, (9, 1, 3, 3), 4, "0001101"),
    (15, (8, 2, 7), 3, "0001111"),
    (19, (6, 1, 2, 6), 4, "0010011"),
    (20, (6, 2, 1, 6), 4, "0010100"),
    (25, (5, 12, 2), 3, "0011001"),
    (31, (4, 10, 3), 3, "0011111"),
    (33, (3, 1, 5, 1, 1, 2), 6, "0100001"),
    (39, (3, 3, 1, 9), 4, "0100111"),
    (45, (2, 1, 4, 1, 1, 1, 2), 7, "0101101"),
    (47, (2, 1, 2, 2, 1, 4), 6, "0101111"),
    (57, (2, 4, 2, 1, 1, 2), 6, "0111001"),
    (63, (2, 63), 2, "0111111"),
    (77, (1, 1, 1, 1, 5, 1, 3), 7, "1001101"),
    (78, (1, 1, 1, 1, 2, 4, 2), 7, "1001110"),
    (79, (1, 1, 1, 1, 1, 4, 1, 2), 8, "1001111"),
    (81, (1, 1, 1, 3, 5, 2), 6, "1010001"),
    (97, (1, 3, 4, 3, 2), 5, "1100001"),
    (105, (1, 4, 1, 3, 2, 2), 6, "1101001"),
    (107, (1, 5, 2, 1, 6), 5, "1101011"),
)
TABLE3_DENOMINATOR = 127

# (二进制串, 分子, 连分数, R)，分母均为 65535
TABLE4: Tuple[Tuple[str, int, Tuple[int, ...], int], ...] = (
    ("1111000011110000", 61680, (1, 61680), 2),
    ("0000111100001111", 3855, (3855,), 1),
    ("1111111100000000", 65280, (1, 65280), 2),
    ("0000000011111111", 255, (255,), 1),
    ("1100110011001100", 52425, (1, 52425), 2),
    ("0011001100110011", 13107, (13107,), 1),
    ("1010101010101010", 43690, (1, 43690), 2),
    ("0101010101010101", 21845, (21845,), 1),
)

TABLE5: Tuple[Tuple[str, int, Tuple[int, ...], int], ...] = (
    ("1000111101011000", 36696, (1, 1, 3, 1, 2, 28, 1, 3, 3, 2), 10),
    ("0110101101010010", 28839, (2, 3, 1, 2, 28, 1, 3, 3, 2), 9),
    ("1001110100011110", 44402, (1, 2, 9, 1, 8, 2, 2, 3, 1, 2, 1, 2), 12),
    ("0111000010100111", 21133, (3, 9, 1, 8, 2, 2, 3, 1, 2, 1, 2), 11),
    ("1001110100011110", 40222, (1, 1, 1, 1, 2, 3, 4, 3, 6), 9),
    ("0101001010001101", 25313, (2, 1, 1, 2, 3, 4, 3, 6), 8),
    ("1010100010101101", 43181, (1, 1, 1, 13, 1, 1, 1, 3, 2, 1, 2, 7, 2), 13),
    ("0101011101010010", 22354, (2, 1, 13, 1, 1, 1, 3, 2, 1, 2, 7, 2), 12),
    ("1000101001100101", 35429, (1, 1, 5, 1, 1, 1, 9, 1, 1, 2, 3, 2, 4), 13),
    ("0111010110011010", 30106, (2, 5, 1, 1, 1, 9, 1, 1, 2, 3, 2, 4), 12),
    ("1001010010101101", 38061, (1, 1, 2, 1, 1, 2, 7, 1, 2, 2, 12), 11),
    ("0110101101010010", 27474, (2, 2, 1, 1, 2, 7, 1, 2, 2, 12), 10),
)
SIXTEEN_BIT_DENOMINATOR = 65535


# ----------------------------
# TableReport / TableBuilder
# ----------------------------


@dataclass
class TableReport:
    """重新计算后的表；discrepancies 为 (行号, 列名)，行号从 1 开始"""
    table_id: int
    title: str
    headers: List[str]
    rows: List[List[str]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    discrepancies: List[Tuple[int, str]] = field(default_factory=list)

    def flagged_columns(self, row_no: int) -> List[str]:
        return [col for r, col in self.discrepancies if r == row_no]


class TableBuilder:
    """
    逐行构建 TableReport 的助手工具。

    使用示例:
        report = (
            TableBuilder(3, "Table 3")
            .headers("No", "Fraction", "R")
            .row(cells)
            .build()
        )
    """

    def __init__(self, table_id: int, title: str) -> None:
        self._report = TableReport(table_id=table_id, title=title, headers=[])

    def headers(self, *names: str) -> "TableBuilder":
        self._report.headers = list(names)
        return self

    def cell(self, row_no: int, column: str, printed: str | None, recomputed: str, *, note: str | None = None) -> str:
        """
        比较打印值与重新计算值；不一致时返回带 *k 标记的文本并登记脚注。

        printed 为 None 表示原表没有该列，直接返回重新计算值。
        """
        if printed is None or printed == recomputed:
            return recomputed
        marker = len(self._report.notes) + 1
        detail = f"*{marker} row {row_no}, {column}: printed {printed}, recomputed {recomputed}"
        if note:
            detail = f"{detail} ({note})"
        self._report.notes.append(detail)
        self._report.discrepancies.append((row_no, column))
        return f"{recomputed} *{marker}"

    def row(self, cells: Sequence[str]) -> "TableBuilder":
        self._report.rows.append(list(cells))
        return self

    def build(self) -> TableReport:
        """构建最终的表"""
        if not self._report.headers:
            raise ValueError("table headers must be set before build")
        if not self._report.rows:
            raise ValueError("table needs at least one row")
        return self._report


# ----------------------------
# 各表的重新计算
# ----------------------------


def _frac(m: int, q: int) -> str:
    return f"{m}/{q}"


def _cf_text(quotients: Sequence[int]) -> str:
    return str(ContinuedFraction(tuple(quotients)))


def _table1() -> TableReport:
    builder = TableBuilder(1, "Table 1: PN sequences and corresponding D sequences").headers(
        "Degree", "Polynomial", "Equivalent Fraction", "Shift", "Period"
    )
    for degree, poly_text, m, q in TABLE1:
        poly = TapPolynomial.parse(poly_text)
        period = lfsr_period(poly)
        # 种子 10..0 与原表的相位一致
        seed = BitString.from_int(1 << (degree - 1), degree)
        generated = pn_sequence(poly, seed, (1 << degree) - 1)
        generated_m = generated.value
        printed_bits = BitString.from_int(m, (1 << degree) - 1)
        shift = cyclic_equivalent(generated, printed_bits)

        note = None
        if generated_m != m and float(generated_m) == float(m):
            note = "printed value is the exact numerator rounded to double precision"
        fraction = builder.cell(degree - 1, "Equivalent Fraction", _frac(m, q), _frac(generated_m, q), note=note)
        builder.row([str(degree), str(poly), fraction, "-" if shift is None else str(shift), str(period)])
    return builder.build()


def _table2() -> TableReport:
    builder = TableBuilder(2, "Table 2: Continued fraction for equivalent fraction of a polynomial").headers(
        "Polynomial", "Equivalent Fraction", "Continued Fraction", "R"
    )
    for row_no, (poly_text, m, q, printed_cf) in enumerate(TABLE2, start=1):
        cf = cf_expand(DFraction(m, q))
        builder.row([
            poly_text,
            _frac(m, q),
            builder.cell(row_no, "Continued Fraction", _cf_text(printed_cf), str(cf)),
            str(len(cf)),
        ])
    return builder.build()


def _table3() -> TableReport:
    q = TABLE3_DENOMINATOR
    builder = TableBuilder(3, "Table 3: Length of continued fraction and binary sequence for fractions").headers(
        "S. No", "Fraction", "Continued Fraction", "Length=R", "Binary Sequence"
    )
    for row_no, (m, printed_cf, printed_r, printed_bits) in enumerate(TABLE3, start=1):
        cf = cf_expand(DFraction(m, q))
        bits = dseq_bits(m, q, 7)
        builder.row([
            str(row_no),
            _frac(m, q),
            builder.cell(row_no, "Continued Fraction", _cf_text(printed_cf), str(cf)),
            builder.cell(row_no, "Length=R", str(printed_r), str(len(cf))),
            builder.cell(row_no, "Binary Sequence", printed_bits, str(bits)),
        ])
    return builder.build()


def _table4() -> TableReport:
    q = SIXTEEN_BIT_DENOMINATOR
    builder = TableBuilder(4, "Table 4: Length of continued fraction for less random binary sequences").headers(
        "SNo", "Binary Sequence", "Fraction", "Continued Fraction", "Length=R"
    )
    # 二进制串为准，分数与连分数由串重新计算
    for row_no, (bits_text, printed_m, printed_cf, printed_r) in enumerate(TABLE4, start=1):
        fraction = bits_to_fraction(BitString.parse(bits_text))
        cf = cf_expand(fraction)
        builder.row([
            str(row_no),
            bits_text,
            builder.cell(row_no, "Fraction", _frac(printed_m, q), str(fraction)),
            builder.cell(row_no, "Continued Fraction", _cf_text(printed_cf), str(cf)),
            builder.cell(row_no, "Length=R", str(printed_r), str(len(cf))),
        ])
    return builder.build()


def _table5() -> TableReport:
    q = SIXTEEN_BIT_DENOMINATOR
    builder = TableBuilder(5, "Table 5: Length of continued fraction for random 16 bit binary sequences").headers(
        "SNo", "Binary Sequence", "Fraction", "Continued Fraction", "Length=R"
    )
    # 分数为准，二进制串由分子重新计算
    for row_no, (printed_bits, m, printed_cf, printed_r) in enumerate(TABLE5, start=1):
        cf = cf_expand(DFraction(m, q))
        bits = BitString.from_int(m, 16)
        builder.row([
            str(row_no),
            builder.cell(row_no, "Binary Sequence", printed_bits, str(bits)),
            _frac(m, q),
            builder.cell(row_no, "Continued Fraction", _cf_text(printed_cf), str(cf)),
            builder.cell(row_no, "Length=R", str(printed_r), str(len(cf))),
        ])
    return builder.build()


_BUILDERS = {1: _table1, 2: _table2, 3: _table3, 4: _table4, 5: _table5}


def build_table(table_id: int) -> TableReport:
    if table_id not in _BUILDERS:
        raise UsageError(f"unknown table id {table_id}; choose one of {', '.join(map(str, TABLE_IDS))}")
    report = _BUILDERS[table_id]()
    logger.debug(f"表 {table_id}: {len(report.rows)} 行, {len(report.discrepancies)} 处不一致")
    return report


def render_table(report: TableReport, renderer: Renderer | None = None) -> str:
    renderer = renderer or Renderer()
    headers = report.headers
    flagged = {
        (row_no - 1, headers.index(column))
        for row_no, column in report.discrepancies
        if column in headers
    }
    lines = [renderer.bold(report.title), ""]
    lines.extend(renderer.table(headers, report.rows, flagged))
    if report.notes:
        lines.append("")
        lines.extend(report.notes)
    return "\n".join(lines)


def reproduce_table(table_id: int, renderer: Renderer | None = None) -> str:
    """重新计算第 table_id 张表并返回排版后的文本。"""
    return render_table(build_table(table_id), renderer)


__all__ = [
    "TABLE_IDS",
    "TableReport",
    "TableBuilder",
    "build_table",
    "render_table",
    "reproduce_table",
]
