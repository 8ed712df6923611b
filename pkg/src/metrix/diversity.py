"""Lexical diversity: TTR family, MTLD, VOCd, and the Maas index."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .doc import Document, Token
from .errors import FitDiverged, NotEnoughTokens

MTLD_TTR_THRESHOLD = 0.72
MTLD_MIN_TOKENS = 10
VOCD_MIN_TOKENS = 50
VOCD_SAMPLE_SIZES = range(35, 51)
VOCD_TRIALS = 100
VOCD_REPETITIONS = 3
VOCD_BOUNDS = (1.0, 500.0)


def ttr(items: Sequence[str]) -> float:
    """Distinct / total; 0 for an empty class by convention."""
    return len(set(items)) / len(items) if items else 0.0


def maas(items: Sequence[str]) -> float:
    """Maas a^2 = (log N - log V) / (log N)^2, base-10 logs.

    Needs at least two tokens and two types, otherwise 0. Lower values
    mean richer vocabulary; identical N with larger V gives smaller a^2.
    """
    n = len(items)
    v = len(set(items))
    if n < 2 or v < 2:
        return 0.0
    log_n = math.log10(n)
    return (log_n - math.log10(v)) / (log_n * log_n)


def _mtld_pass(items: Sequence[str], threshold: float) -> float:
    factors = 0.0
    types: set[str] = set()
    length = 0
    for item in items:
        length += 1
        types.add(item)
        if len(types) / length < threshold:
            factors += 1.0
            types.clear()
            length = 0
    if length:
        remainder_ttr = len(types) / length
        factors += (1.0 - remainder_ttr) / (1.0 - threshold)
    n = len(items)
    return min(n / max(factors, 1e-9), float(n * n))


def mtld(items: Sequence[str], threshold: float = MTLD_TTR_THRESHOLD) -> float:
    """Bidirectional MTLD: mean of the forward and reversed-scan values.

    A factor closes whenever the running TTR drops below the threshold;
    the trailing partial factor weighs (1 - TTR) / (1 - threshold).
    Sequences shorter than MTLD_MIN_TOKENS are degenerate and return
    their own length (callers flag this in diagnostics).
    """
    if len(items) < MTLD_MIN_TOKENS:
        return float(len(items))
    forward = _mtld_pass(items, threshold)
    backward = _mtld_pass(list(reversed(items)), threshold)
    return (forward + backward) / 2.0


def _vocd_model(n: np.ndarray, d: float) -> np.ndarray:
    return (d / n) * (np.sqrt(1.0 + 2.0 * n / d) - 1.0)


def vocd_ttr_curve(items: Sequence[str], rng: np.random.Generator,
                   sizes=VOCD_SAMPLE_SIZES, trials: int = VOCD_TRIALS) -> list[float]:
    """Mean TTR over ``trials`` without-replacement samples per size.

    Sampling protocol (pinned by the oracle tests): for each size, one
    ``rng.permuted`` call shuffles ``trials`` copies of the item codes
    row-wise, and the first ``size`` columns of each row form a sample
    without replacement.
    """
    codes_map: dict[str, int] = {}
    codes = np.array([codes_map.setdefault(it, len(codes_map)) for it in items])
    curve = []
    for size in sizes:
        mat = np.tile(codes, (trials, 1))
        rng.permuted(mat, axis=1, out=mat)
        samples = np.sort(mat[:, :size], axis=1)
        distinct = 1 + (np.diff(samples, axis=1) != 0).sum(axis=1)
        curve.append(float((distinct / size).mean()))
    return curve


def fit_vocd_d(sizes, mean_ttrs, bounds=VOCD_BOUNDS) -> tuple[float, bool]:
    """Least-squares D for the TTR(N) curve; second value flags a bound hit."""
    n = np.asarray(list(sizes), dtype=float)
    t = np.asarray(mean_ttrs, dtype=float)

    def sse(d: float) -> float:
        r = _vocd_model(n, d) - t
        return float(r @ r)

    res = minimize_scalar(sse, bounds=bounds, method="bounded",
                          options={"xatol": 1e-8})
    d = float(res.x)
    lo, hi = bounds
    if d - lo < 1e-3:
        return lo, True
    if hi - d < 1e-3:
        return hi, True
    return d, False


def vocd(items: Sequence[str], seed: int, *, strict: bool = False) -> float:
    """VOCd D parameter from random-subsample TTR curve fitting.

    For each of three repetitions (sub-seeded from ``seed``), draws 100
    without-replacement samples at every size 35..50, records the mean
    TTR, and fits D in TTR(N) = (D/N)(sqrt(1 + 2N/D) - 1); the result is
    the mean of the three fits. Deterministic for a fixed seed. Fits
    that run into the (1, 500) bounds are clamped there, or raise
    FitDiverged when ``strict``.
    """
    if len(items) < VOCD_MIN_TOKENS:
        raise NotEnoughTokens(f"vocd needs >= {VOCD_MIN_TOKENS} tokens, got {len(items)}")
    ds = []
    for rep in range(VOCD_REPETITIONS):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, rep])))
        curve = vocd_ttr_curve(items, rng)
        d, hit_bound = fit_vocd_d(VOCD_SAMPLE_SIZES, curve)
        if hit_bound and strict:
            raise FitDiverged(f"D fit clamped at {d}")
        ds.append(d)
    return sum(ds) / len(ds)


# ---------------------------------------------------------------------------
# document-level slice

def _is_rel_pron(t: Token) -> bool:
    return t.upos == "PRON" and t.morph.get("PronType") == "Rel"


def _is_ind_pron(t: Token) -> bool:
    return t.upos == "PRON" and t.morph.get("PronType") == "Ind"


def ttr_family(doc: Document) -> dict[str, float]:
    """The 19 TTR/density metrics over word classes and lemma classes.

    Surface TTRs use case-folded surfaces; lemma TTRs use case-folded
    lemmas. The noun class here excludes proper nouns; functional words
    are the non-content, non-punctuation tokens.
    """
    words = doc.words()
    wc = len(words)
    tokens = [t for s in doc.sentences for t in s.tokens]

    content = [t for t in words if t.is_content_word]
    nouns = [t for t in tokens if t.upos == "NOUN"]
    verbs = [t for t in tokens if t.upos == "VERB"]
    advs = [t for t in tokens if t.upos == "ADV"]
    adjs = [t for t in tokens if t.upos == "ADJ"]
    prons = [t for t in tokens if t.upos == "PRON"]
    functional = [t for t in tokens
                  if not t.is_content_word and t.upos != "PUNCT" and t.is_alphanumeric]

    def surfaces(ts):
        return [t.folded for t in ts]

    def lemmas(ts):
        return [t.lemma_folded for t in ts]

    return {
        "LDTTRa": ttr(surfaces(words)),
        "LDTTRcw": ttr(surfaces(content)),
        "LDTTRno": ttr(surfaces(nouns)),
        "LDTTRvb": ttr(surfaces(verbs)),
        "LDTTRadv": ttr(surfaces(advs)),
        "LDTTRadj": ttr(surfaces(adjs)),
        "LDTTRLa": ttr(lemmas(words)),
        "LDTTRLno": ttr(lemmas(nouns)),
        "LDTTRLvb": ttr(lemmas(verbs)),
        "LDTTRLadv": ttr(lemmas(advs)),
        "LDTTRLadj": ttr(lemmas(adjs)),
        "LDTTRLpron": ttr(lemmas(prons)),
        "LDTTRLrpron": ttr(lemmas([t for t in prons if _is_rel_pron(t)])),
        "LDTTRLipron": ttr(lemmas([t for t in prons if _is_ind_pron(t)])),
        "LDTTRLifn": ttr(lemmas(functional)),
        "LDDno": len(nouns) / wc if wc else 0.0,
        "LDDvb": len(verbs) / wc if wc else 0.0,
        "LDDadv": len(advs) / wc if wc else 0.0,
        "LDDadj": len(adjs) / wc if wc else 0.0,
    }
