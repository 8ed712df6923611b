"""Small numeric helpers shared by the metric modules."""

import math
from typing import Sequence


def mean0(values: Sequence[float]) -> float:
    """Arithmetic mean with the empty-input-is-zero convention."""
    return sum(values) / len(values) if values else 0.0


def pstd(values: Sequence[float]) -> float:
    """Population standard deviation; 0 for fewer than two values."""
    n = len(values)
    if n < 2:
        return 0.0
    m = sum(values) / n
    return math.sqrt(sum((v - m) ** 2 for v in values) / n)


def pvariance(values: Sequence[float]) -> float:
    n = len(values)
    if n == 0:
        return 0.0
    m = sum(values) / n
    return sum((v - m) ** 2 for v in values) / n


def incidence(count: float, word_count: int) -> float:
    """Occurrences per 1000 words."""
    return 1000.0 * count / word_count if word_count else 0.0


def fmt_sig(value: float, digits: int = 6) -> str:
    """Locale-independent significant-digit formatting ('.' decimal point)."""
    v = float(value)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return format(v, f".{digits}g")


def round_sig(value: float, digits: int = 6) -> float:
    return float(fmt_sig(value, digits))
