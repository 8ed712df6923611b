"""Tunable thresholds surfaced in the run-config file.

Everything a researcher may want to vary without touching code lives
here; the CLI ``--config`` flag loads overrides from JSON.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class MetricParams:
    rare_zipf_threshold: float = 4.0
    mtld_ttr_threshold: float = 0.72
    embedding_dim: int = 256
    # bin edges for the 1-7 and 1-9 norm scales
    psycho_bins_scale7: tuple[float, ...] = (1.0, 2.5, 4.0, 5.5, 7.0)
    psycho_bins_scale9: tuple[float, ...] = (1.0, 3.0, 5.0, 7.0, 9.0)

    @staticmethod
    def from_json(path: str | Path) -> "MetricParams":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        known = {f.name for f in dataclasses.fields(MetricParams)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        for key in ("psycho_bins_scale7", "psycho_bins_scale9"):
            if key in raw:
                raw[key] = tuple(float(v) for v in raw[key])
        return MetricParams(**raw)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2)
