from __future__ import annotations

from typing import List, Sequence

from ..config import OutputOptions

_BOLD = "\x1b[1m"
_YELLOW = "\x1b[33m"
_RESET = "\x1b[0m"


class Renderer:
    """
    文本输出的装饰与对齐。

    关闭着色时输出纯 ASCII/UTF-8 文本，同一输入逐字节一致。
    """

    def __init__(self, options: OutputOptions | None = None) -> None:
        self.options = options or OutputOptions()

    def _wrap(self, code: str, text: str) -> str:
        if not self.options.color:
            return text
        return f"{code}{text}{_RESET}"

    def bold(self, text: str) -> str:
        return self._wrap(_BOLD, text)

    def flagged(self, text: str) -> str:
        return self._wrap(_YELLOW, text)

    def table(self, headers: Sequence[str], rows: Sequence[Sequence[str]], flagged: set[tuple[int, int]] | None = None) -> List[str]:
        """
        按列左对齐排版；列宽按未着色文本计算，着色在填充之后进行。

        Args:
            headers: 表头
            rows: 单元格文本
            flagged: 需要高亮的 (行下标, 列下标)
        """
        flagged = flagged or set()
        widths = [len(h) for h in headers]
        for row in rows:
            for col, cell in enumerate(row):
                widths[col] = max(widths[col], len(cell))

        def line(cells: Sequence[str], row_index: int | None) -> str:
            parts = []
            for col, cell in enumerate(cells):
                padded = cell.ljust(widths[col])
                if row_index is not None and (row_index, col) in flagged:
                    padded = self.flagged(padded)
                parts.append(padded)
            return "  ".join(parts).rstrip()

        lines = [self.bold(line(headers, None)), "  ".join("-" * w for w in widths)]
        lines.extend(line(row, i) for i, row in enumerate(rows))
        return lines


__all__ = ["Renderer"]
