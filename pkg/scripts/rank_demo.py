#!/usr/bin/env python3
"""End-to-end feature-ranking walkthrough on a two-class synthetic corpus.

Builds a corpus of short-sentence vs long-sentence documents, extracts
the metric matrix, ranks features by ANOVA F, and prints the top table.
"""

import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import csv

import numpy as np

from metrix.cli import main as metrix_main
from metrix.ranking import rank_features
from metrix.registry import CODES, describe
from metrix.synth import synth_corpus


def main() -> int:
    with tempfile.TemporaryDirectory() as tmp:
        corpus = Path(tmp) / "mixed.conllu"
        simple = synth_corpus(1, 25, n_sentences=6, long=False, id_prefix="simple")
        complex_ = synth_corpus(2, 25, n_sentences=6, long=True, id_prefix="complex")
        corpus.write_text(simple + "\n" + complex_, encoding="utf-8")
        out = Path(tmp) / "mixed.csv"
        code = metrix_main(["run", "--input", str(corpus), "--out", str(out)])
        if code != 0:
            return code
        with open(out, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            rows = list(reader)
    ids = [r[0] for r in rows]
    labels = ["simple" if i.startswith("simple") else "complex" for i in ids]
    ix = [header.index(c) for c in CODES]
    matrix = np.array([[float(r[i]) for i in ix] for r in rows])
    ranked, notes = rank_features(matrix, list(CODES), labels, alpha=0.05)
    for note in notes:
        print("#", note)
    print(f"{len(ranked)} features survive alpha=0.05; top 15:")
    print(f"{'rank':>4}  {'code':<12} {'F':>10}  description")
    for r in ranked[:15]:
        print(f"{r.rank:>4}  {r.code:<12} {r.f_statistic:>10.2f}  {describe(r.code).description}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
