"""
rand-cf 命令行入口。

退出码：0 成功；1 定义域错误；2 用法错误（含 argparse 报错）。
结果写 stdout，诊断写 stderr；日志只写 stderr，保证 stdout 逐字节确定。
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, List, Sequence

from .. import __version__
from ..bitseq import parse_bits
from ..cf import cf_expand, r_measure_bits, r_measure_fraction
from ..codec import dumps_report, dumps_reports
from ..config import OutputOptions, ScanOptions
from ..dseq import DFraction, bits_to_fraction, dseq_bits, dseq_period_bits
from ..errors import CapabilityError, DomainError, UsageError
from ..lfsr import MAX_ENUMERATION_DEGREE, TapPolynomial, default_seed, pn_sequence
from ..measures import MeasureReport, iter_cf_lengths, measure_report, write_scan_csv
from ..numtheory import multiplicative_order
from .render import Renderer
from .tables import TABLE_IDS, reproduce_table

logger = logging.getLogger("rand_cf.cli")

Handler = Callable[[argparse.Namespace, Renderer], None]

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _emit(line: str = "") -> None:
    sys.stdout.write(line + "\n")


# ----------------------------
# 子命令实现
# ----------------------------


def _cmd_pn(args: argparse.Namespace, renderer: Renderer) -> None:
    poly = TapPolynomial.parse(args.poly)
    seed = parse_bits(args.seed) if args.seed is not None else default_seed(poly.degree)
    if args.len is not None:
        length = args.len
    elif poly.degree > MAX_ENUMERATION_DEGREE:
        raise CapabilityError(
            f"a full period of degree {poly.degree} is too long to print; pass --len"
        )
    else:
        length = (1 << poly.degree) - 1
    _emit(str(pn_sequence(poly, seed, length)))


def _cmd_dseq(args: argparse.Namespace, renderer: Renderer) -> None:
    fraction = DFraction.parse(args.frac)
    if args.period:
        bits = dseq_period_bits(fraction.numerator, fraction.denominator)
    else:
        bits = dseq_bits(fraction.numerator, fraction.denominator, args.len)
    _emit(str(bits))


def _cmd_tofrac(args: argparse.Namespace, renderer: Renderer) -> None:
    _emit(str(bits_to_fraction(parse_bits(args.bits))))


def _cmd_cf(args: argparse.Namespace, renderer: Renderer) -> None:
    # 含 '/' 视为分数，否则视为比特串
    if "/" in args.value:
        fraction = DFraction.parse(args.value)
        cf = cf_expand(fraction)
        r = r_measure_fraction(fraction)
    else:
        bits = parse_bits(args.value)
        fraction = bits_to_fraction(bits)
        cf = cf_expand(fraction)
        r = r_measure_bits(bits)
        _emit(f"{bits} -> {fraction}")
    _emit(str(cf))
    _emit(renderer.bold(f"R = {r}"))


def _format_report(report: MeasureReport) -> List[str]:
    r_auto = report.r_auto
    period = "-" if report.period_hint is None else str(report.period_hint)
    return [
        f"sequence = {report.sequence}",
        f"fraction = {report.fraction}",
        f"cf = {report.cf}",
        f"r_cf = {report.r_cf}",
        f"r_auto = {r_auto} (≈ {float(r_auto):.4f})",
        f"period = {period}",
    ]


def _cmd_measure(args: argparse.Namespace, renderer: Renderer) -> None:
    reports = [measure_report(parse_bits(text)) for text in args.bits]
    if renderer.options.json:
        if len(reports) == 1:
            data = dumps_report(reports[0].to_payload())
        else:
            data = dumps_reports(report.to_payload() for report in reports)
        _emit(data.decode("utf-8"))
        return
    for index, report in enumerate(reports):
        if index:
            _emit()
        for line in _format_report(report):
            _emit(line)


def _cmd_order(args: argparse.Namespace, renderer: Renderer) -> None:
    _emit(str(multiplicative_order(args.base, args.mod)))


def _parse_numerators(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _cmd_scan(args: argparse.Namespace, renderer: Renderer) -> None:
    options = ScanOptions.from_env()
    if args.workers is not None:
        options.workers = args.workers
    options.wide = args.wide
    rows = iter_cf_lengths(args.den, args.nums, options)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            written = write_scan_csv(rows, fh, wide=options.wide)
        logger.info(f"已写出 {written} 行到 {args.csv}")
    else:
        write_scan_csv(rows, sys.stdout, wide=options.wide)


def _cmd_table(args: argparse.Namespace, renderer: Renderer) -> None:
    _emit(reproduce_table(args.id, renderer))


# ----------------------------
# 参数解析
# ----------------------------


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rand-cf",
        description="Continued-fraction randomness measure for PN and D sequences.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="increase log verbosity (stderr)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("pn", help="generate an LFSR PN sequence")
    p.add_argument("--poly", required=True, help='polynomial: "6,1,0", "1000011" or "x^6+x+1"')
    p.add_argument("--seed", help="initial register bits a_0..a_{r-1} (default 0...01)")
    p.add_argument("--len", type=_positive_int, help="number of output bits (default 2^r - 1)")
    p.set_defaults(handler=_cmd_pn)

    p = sub.add_parser("dseq", help="binary D sequence of m/q")
    p.add_argument("--frac", required=True, help="generator fraction m/q")
    length = p.add_mutually_exclusive_group(required=True)
    length.add_argument("--len", type=_positive_int, help="number of output bits")
    length.add_argument("--period", action="store_true", help="emit exactly one period")
    p.set_defaults(handler=_cmd_dseq)

    p = sub.add_parser("tofrac", help="map a bit string to its D-sequence fraction")
    p.add_argument("bits")
    p.set_defaults(handler=_cmd_tofrac)

    p = sub.add_parser("cf", help="continued fraction and R of m/q or of a bit string")
    p.add_argument("value", help="m/q or a bit string")
    p.set_defaults(handler=_cmd_cf)

    p = sub.add_parser("measure", help="full measure report for bit strings")
    p.add_argument("bits", nargs="+")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=_cmd_measure)

    p = sub.add_parser("order", help="multiplicative order of base modulo mod")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.set_defaults(handler=_cmd_order)

    p = sub.add_parser("scan", help="CF lengths for every numerator over a denominator (CSV)")
    p.add_argument("--den", type=int, required=True)
    p.add_argument("--nums", type=_parse_numerators, help="comma-separated numerators (default 1..den-1)")
    p.add_argument("--csv", help="write CSV to this path instead of stdout")
    p.add_argument("--wide", action="store_true", help="add binary,cf columns")
    p.add_argument("--workers", type=_positive_int, help="worker processes (default $RAND_CF_WORKERS or 1)")
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("table", help="recompute one of the published tables")
    p.add_argument("--id", type=int, required=True, choices=TABLE_IDS)
    p.set_defaults(handler=_cmd_table)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = _LOG_LEVELS[min(verbosity, len(_LOG_LEVELS) - 1)]
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )
    logging.getLogger("rand_cf").setLevel(level)


def run(argv: Sequence[str] | None = None) -> int:
    """解析 argv 并执行一个子命令，返回退出码。"""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0

    _configure_logging(args.verbose)
    options = OutputOptions.from_env(is_tty=sys.stdout.isatty(), json=getattr(args, "json", False))
    renderer = Renderer(options)
    handler: Handler = args.handler
    try:
        handler(args, renderer)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (DomainError, CapabilityError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "run", "main"]
