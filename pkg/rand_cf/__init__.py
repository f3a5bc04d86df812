"""
基于连分数长度的序列随机性度量。

将二进制序列映射为 D 序列生成分数 m/(2^N - 1)，对其作连分数展开，以分量个数 R
作为随机性度量；同时提供 LFSR/D 序列生成器与基于自相关的对照度量。
"""

__version__ = "0.1.0"

from . import codec, types
from .bitseq import BitString, complement, cyclic_equivalent, min_rotation, parse_bits, rotate_right, value
from .cf import ContinuedFraction, cf_expand, cf_fold, r_measure_bits, r_measure_fraction
from .codec import dumps_report, dumps_reports, loads_report, loads_reports
from .config import OutputOptions, ScanOptions
from .dseq import (
    DFraction,
    bits_to_fraction,
    dseq_bits,
    dseq_period,
    dseq_period_bits,
    is_maximal_dseq,
    smallest_equivalent_fraction,
)
from .errors import BitParseError, CapabilityError, DomainError, RandCFError, UsageError
from .lfsr import LfsrSeed, TapPolynomial, default_seed, find_seed, is_maximal, lfsr_period, pn_sequence
from .measures import (
    MeasureReport,
    ScanRow,
    autocorrelation,
    iter_cf_lengths,
    measure_report,
    r_autocorr,
    scan_cf_lengths,
    write_scan_csv,
)
from .numtheory import gcd, is_prime, is_primitive_root, mod_pow, multiplicative_order
from .types import MeasureBatchPayload, MeasureReportPayload, ScanRowPayload

__all__ = [
    # numtheory
    "gcd",
    "mod_pow",
    "multiplicative_order",
    "is_prime",
    "is_primitive_root",
    # bitseq
    "BitString",
    "parse_bits",
    "value",
    "complement",
    "rotate_right",
    "cyclic_equivalent",
    "min_rotation",
    # dseq
    "DFraction",
    "bits_to_fraction",
    "dseq_bits",
    "dseq_period",
    "dseq_period_bits",
    "is_maximal_dseq",
    "smallest_equivalent_fraction",
    # lfsr
    "LfsrSeed",
    "TapPolynomial",
    "default_seed",
    "pn_sequence",
    "lfsr_period",
    "is_maximal",
    "find_seed",
    # cf
    "ContinuedFraction",
    "cf_expand",
    "cf_fold",
    "r_measure_fraction",
    "r_measure_bits",
    # measures
    "autocorrelation",
    "r_autocorr",
    "MeasureReport",
    "measure_report",
    "ScanRow",
    "iter_cf_lengths",
    "scan_cf_lengths",
    "write_scan_csv",
    # codec / types / config
    "codec",
    "types",
    "dumps_report",
    "dumps_reports",
    "loads_report",
    "loads_reports",
    "MeasureReportPayload",
    "MeasureBatchPayload",
    "ScanRowPayload",
    "OutputOptions",
    "ScanOptions",
    # errors
    "RandCFError",
    "DomainError",
    "BitParseError",
    "CapabilityError",
    "UsageError",
]
