"""Seven Spanish readability indices from word/sentence statistics.

All indices depend only on word tokens, sentence count, syllables,
letters, and type counts, so they are invariant under paragraph
re-segmentation. The grade-level formula uses per-word syllable and
per-sentence word averages directly (not per-100-words); Honoré uses
natural log while Maas (in the diversity module) is base-10.
"""

from __future__ import annotations

import math
from collections import Counter

from .doc import Document
from .errors import DegenerateText
from .stats import pvariance

HONORE_CAP = 1e6  # sentinel when every type is a hapax


def readability_indices(doc: Document) -> dict[str, float]:
    """Compute RDFHGL, RDSPP, RDMU, RDSMOG, RDFOG, RDHS, RDBR.

    Raises DegenerateText for documents with fewer than two word tokens.
    """
    words = doc.words()
    n = len(words)
    if n < 2:
        raise DegenerateText(f"readability needs >= 2 words, got {n}")
    s = len(doc.sentences)
    syllables = sum(t.syllables for t in words)
    letters = [float(t.letters) for t in words]
    counts = Counter(t.folded for t in words)
    v = len(counts)
    v1 = sum(1 for c in counts.values() if c == 1)
    poly = sum(1 for t in words if t.syllables >= 3)

    syl_per_word = syllables / n
    words_per_sentence = n / s
    mean_letters = sum(letters) / n
    var_letters = pvariance(letters)

    mu = 0.0
    if var_letters > 0.0:
        mu = (n / (n - 1)) * (mean_letters / var_letters) * 100.0

    honore = HONORE_CAP
    if v1 < v:
        honore = 100.0 * math.log(n) / (1.0 - v1 / v)

    return {
        "RDFHGL": 206.84 - 0.60 * syl_per_word - 1.02 * words_per_sentence,
        "RDSPP": 206.835 - 62.3 * syl_per_word - words_per_sentence,
        "RDMU": mu,
        "RDSMOG": 1.043 * math.sqrt(poly * 30.0 / s) + 3.1291,
        "RDFOG": 0.4 * (words_per_sentence + 100.0 * poly / n),
        "RDHS": honore,
        "RDBR": n ** (v ** -0.165),
    }
