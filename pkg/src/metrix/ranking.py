"""One-way ANOVA feature ranking over a metric matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats as sps

from .errors import DegenerateLabels, TooFewRows


@dataclass(frozen=True)
class RankedFeature:
    code: str
    f_statistic: float
    p_value: float
    rank: int


def rank_features(matrix: np.ndarray, codes: Sequence[str], labels: Sequence,
                  alpha: float = 0.05) -> tuple[list[RankedFeature], list[str]]:
    """Rank features by the one-way ANOVA F statistic across classes.

    Features with p > alpha are dropped; constant columns are dropped
    up front and returned in the notes list. Needs at least two classes
    and two rows per class. Ties in F break on code for a deterministic
    ordering.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    x = np.asarray(matrix, dtype=float)
    if x.ndim != 2 or x.shape[1] != len(codes):
        raise ValueError(f"matrix shape {x.shape} does not match {len(codes)} codes")
    y = np.asarray(labels)
    if len(y) != x.shape[0]:
        raise ValueError("labels length does not match matrix rows")

    classes, counts = np.unique(y, return_counts=True)
    if len(classes) < 2:
        raise DegenerateLabels(f"need >= 2 classes, got {len(classes)}")
    if counts.min() < 2:
        small = classes[counts.argmin()]
        raise TooFewRows(f"class {small!r} has {counts.min()} row(s), need >= 2")

    constant = np.ptp(x, axis=0) == 0.0
    notes = [f"dropped constant column {codes[i]}" for i in np.flatnonzero(constant)]
    keep = np.flatnonzero(~constant)
    if keep.size == 0:
        return [], notes

    groups = [x[y == c][:, keep] for c in classes]
    f_stats, p_values = sps.f_oneway(*groups)
    f_stats = np.nan_to_num(f_stats, nan=0.0, posinf=np.inf)
    p_values = np.nan_to_num(p_values, nan=1.0)

    survivors = [(codes[keep[j]], float(f_stats[j]), float(p_values[j]))
                 for j in range(keep.size) if p_values[j] <= alpha]
    survivors.sort(key=lambda item: (-item[1], item[0]))
    ranked = [RankedFeature(code, f, p, rank)
              for rank, (code, f, p) in enumerate(survivors, start=1)]
    return ranked, notes
