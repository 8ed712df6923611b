"""Psycholinguistic norm ratios, Zipf frequency metrics, connective incidence.

Norm lookups try the lemma first and fall back to the surface form.
Each norm dimension gets an overall mean (normalized by its scale
maximum) plus four bin ratios over the covered words; bins are
half-open on the left and closed at the final right edge, so they
partition coverage exactly.
"""

from __future__ import annotations

from .doc import Document
from .lexicons import ConnectiveSets, FrequencyTable, NormsTable, match_connectives
from .stats import incidence, mean0

RARE_ZIPF_THRESHOLD = 4.0

BINS_SCALE7 = (1.0, 2.5, 4.0, 5.5, 7.0)
BINS_SCALE9 = (1.0, 3.0, 5.0, 7.0, 9.0)

# (code prefix, norm dimension, scale max)
DIMENSIONS = (
    ("PSYC", "concreteness", 7.0),
    ("PSYIM", "imageability", 7.0),
    ("PSYFM", "familiarity", 7.0),
    ("PSYAoA", "age_of_acquisition", 7.0),
    ("PSYARO", "arousal", 9.0),
    ("PSYVAL", "valence", 9.0),
)


def _bin_index(value: float, edges) -> int:
    for i in range(3):
        if value < edges[i + 1]:
            return i
    return 3


def psycholinguistic_ratios(doc: Document, norms: NormsTable,
                            bins7=BINS_SCALE7, bins9=BINS_SCALE9) -> tuple[dict[str, float], float]:
    """The 30 norm metrics plus the coverage diagnostic.

    Coverage is the fraction of content-word tokens with any norm entry;
    a dimension with zero covered tokens reports five zeros.
    """
    content = doc.content_words()
    entries = [norms.lookup(t.lemma_folded, t.folded) for t in content]
    covered_any = sum(1 for e in entries if e is not None)
    coverage = covered_any / len(content) if content else 0.0

    out: dict[str, float] = {}
    for code, dimension, scale_max in DIMENSIONS:
        edges = bins7 if scale_max == 7.0 else bins9
        values = [e.get(dimension) for e in entries if e is not None]
        values = [v for v in values if v is not None]
        if not values:
            out[code] = 0.0
            for i in range(4):
                out[f"{code}{i}"] = 0.0
            continue
        out[code] = mean0(values) / scale_max
        bins = [0, 0, 0, 0]
        for v in values:
            bins[_bin_index(v, edges)] += 1
        for i in range(4):
            out[f"{code}{i}"] = bins[i] / len(values)
    return out, coverage


def word_frequency_metrics(doc: Document, table: FrequencyTable,
                           rare_threshold: float = RARE_ZIPF_THRESHOLD) -> dict[str, float]:
    """Rare-word counts/incidences and mean Zipf statistics.

    Zipf is looked up on the case-folded surface; out-of-vocabulary
    words score 0.0 and therefore always count as rare. The per-sentence
    "rarest" means skip sentences without the relevant word class.
    """
    words = doc.words()
    wc = len(words)

    def z(t) -> float:
        return table.get(t.folded)

    classes = {
        "WFRCno": [t for t in words if t.upos in ("NOUN", "PROPN")],
        "WFRCvb": [t for t in words if t.upos == "VERB"],
        "WFRCadj": [t for t in words if t.upos == "ADJ"],
        "WFRCadv": [t for t in words if t.upos == "ADV"],
        "WFRCcw": [t for t in words if t.is_content_word],
    }
    out: dict[str, float] = {}
    for code, tokens in classes.items():
        rare = sum(1 for t in tokens if z(t) < rare_threshold)
        out[code] = float(rare)
        out[code + "i"] = incidence(rare, wc)
    distinct_rare = {t.folded for t in classes["WFRCcw"] if z(t) < rare_threshold}
    out["WFRCcwd"] = float(len(distinct_rare))
    out["WFRCcwdi"] = incidence(len(distinct_rare), wc)

    out["WFMcw"] = mean0([z(t) for t in classes["WFRCcw"]])
    out["WFMw"] = mean0([z(t) for t in words])

    sentence_mins = []
    sentence_content_mins = []
    for sent in doc.sentences:
        ws = sent.words()
        if ws:
            sentence_mins.append(min(z(t) for t in ws))
        cs = [t for t in ws if t.is_content_word]
        if cs:
            sentence_content_mins.append(min(z(t) for t in cs))
    out["WFMrw"] = mean0(sentence_mins)
    out["WFMrcw"] = mean0(sentence_content_mins)
    return out


def connective_incidence(doc: Document, sets: ConnectiveSets) -> dict[str, float]:
    """Per-1000-word incidence of each connective category and of all matches.

    A phrase listed under two categories counts in both, and in the
    total twice; matching is longest-first and non-overlapping within
    each category.
    """
    wc = len(doc.words())
    totals = {c: 0 for c in ("causal", "logical", "adversative", "temporal", "additive")}
    for sent in doc.sentences:
        for category, count in match_connectives(sent, sets).items():
            totals[category] += count
    return {
        "CNCAll": incidence(sum(totals.values()), wc),
        "CNCCaus": incidence(totals["causal"], wc),
        "CNCLogic": incidence(totals["logical"], wc),
        "CNCADC": incidence(totals["adversative"], wc),
        "CNCTemp": incidence(totals["temporal"], wc),
        "CNCAdd": incidence(totals["additive"], wc),
    }
