"""
命令行层：子命令分发、原始表格重算、文本装饰。
"""

from .app import build_parser, main, run
from .render import Renderer
from .tables import TableBuilder, TableReport, build_table, render_table, reproduce_table

__all__ = [
    "build_parser",
    "main",
    "run",
    "Renderer",
    "TableBuilder",
    "TableReport",
    "build_table",
    "render_table",
    "reproduce_table",
]
