"""Syntactic complexity and syntactic pattern density metrics.

Clauses are dependency-defined: a VERB token counts as a clause head
when it is the root or attaches through a clausal relation (or is a
verb conjoined to a verb). There is no constituency pass; one nominal
head means one noun phrase.
"""

from __future__ import annotations

from typing import Sequence

from .doc import Document, Sentence
from .lexicons import Phrase, match_phrases
from .stats import incidence, mean0

CLAUSE_RELATIONS = frozenset({"ccomp", "xcomp", "advcl", "acl", "csubj", "parataxis"})
NP_MODIFIER_RELATIONS = frozenset({"amod", "det", "nmod", "nummod"})


def _base(deprel: str) -> str:
    return deprel.split(":", 1)[0]


def clause_count(sentence: Sentence) -> int:
    """Number of clauses; 0 for verbless sentences, else at least 1."""
    tokens = sentence.tokens
    if not any(t.upos == "VERB" for t in tokens):
        return 0
    count = 0
    for t in tokens:
        if t.upos != "VERB":
            continue
        rel = _base(t.deprel)
        if t.head == 0 or rel in CLAUSE_RELATIONS:
            count += 1
        elif rel == "conj" and 1 <= t.head <= len(tokens) and tokens[t.head - 1].upos == "VERB":
            count += 1
    return max(count, 1)


def min_edit_distance(a: Sequence[str], b: Sequence[str]) -> float:
    """Levenshtein distance with unit costs, normalized by max(|a|, |b|)."""
    n, m = len(a), len(b)
    if n == 0 and m == 0:
        return 0.0
    if n == 0 or m == 0:
        return 1.0
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ai = a[i - 1]
        for j in range(1, m + 1):
            cur[j] = min(prev[j] + 1,
                         cur[j - 1] + 1,
                         prev[j - 1] + (ai != b[j - 1]))
        prev = cur
    return prev[m] / max(n, m)


def syntactic_complexity(doc: Document) -> dict[str, float]:
    """SYNNP, SYNLE, the three adjacent-sentence MED means, and SYNCLS1..7."""
    sentences = doc.sentences

    # modifiers per nominal head, document-wide
    modifier_counts = []
    for sent in sentences:
        dep_by_head: dict[int, int] = {}
        for t in sent.tokens:
            if _base(t.deprel) in NP_MODIFIER_RELATIONS and t.head > 0:
                dep_by_head[t.head] = dep_by_head.get(t.head, 0) + 1
        for pos, t in enumerate(sent.tokens, start=1):
            if t.upos in ("NOUN", "PROPN"):
                modifier_counts.append(dep_by_head.get(pos, 0))

    # words strictly before a verbal root, averaged over verbal-root sentences
    before_root = []
    for sent in sentences:
        root = sent.root_position()
        if sent.tokens[root].upos == "VERB":
            before_root.append(sum(1 for t in sent.tokens[:root] if t.is_alphanumeric))

    med_w, med_l, med_p = [], [], []
    for prev, cur in zip(sentences, sentences[1:]):
        pw, cw = prev.words(), cur.words()
        med_w.append(min_edit_distance([t.folded for t in pw], [t.folded for t in cw]))
        med_l.append(min_edit_distance([t.lemma_folded for t in pw], [t.lemma_folded for t in cw]))
        med_p.append(min_edit_distance([t.upos for t in pw], [t.upos for t in cw]))

    n = len(sentences)
    clauses = [clause_count(s) for s in sentences]
    out = {
        "SYNNP": mean0(modifier_counts),
        "SYNLE": mean0(before_root),
        "SYNMEDwrd": mean0(med_w),
        "SYNMEDlem": mean0(med_l),
        "SYNMEDpos": mean0(med_p),
    }
    for k in range(1, 8):
        out[f"SYNCLS{k}"] = sum(1 for c in clauses if c == k) / n
    return out


def pattern_density(doc: Document, negations: frozenset[Phrase]) -> dict[str, float]:
    """Counts and per-1000 densities for phrase and particle patterns."""
    words = doc.words()
    wc = len(words)
    tokens = [t for s in doc.sentences for t in s.tokens]

    np_count = sum(1 for t in tokens if t.upos in ("NOUN", "PROPN"))
    vp_count = sum(1 for t in tokens
                   if (t.upos == "VERB" and t.morph.get("VerbForm") == "Fin")
                   or (t.upos == "AUX" and t.head == 0))
    neg_count = sum(match_phrases([t.folded for t in s.tokens], negations)
                    for s in doc.sentences)
    ger_count = sum(1 for t in tokens if t.morph.get("VerbForm") == "Ger")
    inf_count = sum(1 for t in tokens if t.morph.get("VerbForm") == "Inf")
    cconj_count = sum(1 for t in tokens if t.upos == "CCONJ")
    sconj_count = sum(1 for t in tokens if t.upos == "SCONJ")

    out: dict[str, float] = {}
    for code, count in (("DRNP", np_count), ("DRVP", vp_count),
                        ("DRNEG", neg_count), ("DRGER", ger_count),
                        ("DRINF", inf_count), ("DRCCONJ", cconj_count),
                        ("DRSCONJ", sconj_count)):
        out[code + "c"] = float(count)
        out[code] = incidence(count, wc)
    return out
