"""Descriptive, word-information, and sentence-length-band metrics.

"Word" throughout means a token whose surface contains at least one
letter or digit; punctuation never counts. All ``*i`` / bare-incidence
codes are 1000 * count / word count.
"""

from __future__ import annotations

from .doc import Document, Token
from .errors import EmptyDocument
from .stats import incidence, mean0, pstd


def _words(doc: Document) -> list[Token]:
    words = doc.words()
    if not words:
        raise EmptyDocument(doc.source_id or "document")
    return words


def descriptive(doc: Document) -> dict[str, float]:
    """The 27 descriptive metrics: counts, lengths, and their spreads."""
    words = _words(doc)
    wc = len(words)
    sentences = doc.sentences

    sent_words = [s.words() for s in sentences]
    sent_lens = [len(w) for w in sent_words]
    sent_nonstop_lens = [sum(1 for t in w if not t.is_stopword) for w in sent_words]
    par_lens = [end - start for start, end in doc.paragraphs]

    content = [t for t in words if t.is_content_word]
    nonstop = [t for t in words if not t.is_stopword]

    syl_all = [float(t.syllables) for t in words]
    syl_content = [float(t.syllables) for t in content]
    let_all = [float(t.letters) for t in words]
    let_content = [float(t.letters) for t in content]
    let_nonstop = [float(t.letters) for t in nonstop]
    let_lemma = [float(t.lemma_letters) for t in words]

    return {
        "DESPC": float(len(doc.paragraphs)),
        "DESPCi": incidence(len(doc.paragraphs), wc),
        "DESSC": float(len(sentences)),
        "DESSCi": incidence(len(sentences), wc),
        "DESWC": float(wc),
        "DESWCU": float(len({t.folded for t in words})),
        "DESWCUi": incidence(len({t.folded for t in words}), wc),
        "DESPL": mean0(par_lens),
        "DESPLd": pstd(par_lens),
        "DESSL": mean0(sent_lens),
        "DESSLd": pstd(sent_lens),
        "DESSNSL": mean0(sent_nonstop_lens),
        "DESSNSLd": pstd(sent_nonstop_lens),
        "DESSLmax": float(max(sent_lens)),
        "DESSLmin": float(min(sent_lens)),
        "DESWLsy": mean0(syl_all),
        "DESWLsyd": pstd(syl_all),
        "DESCWLsy": mean0(syl_content),
        "DESCWLsyd": pstd(syl_content),
        "DESCWLlt": mean0(let_content),
        "DESCWLltd": pstd(let_content),
        "DESWLlt": mean0(let_all),
        "DESWLltd": pstd(let_all),
        "DESWNSLlt": mean0(let_nonstop),
        "DESWNSLltd": pstd(let_nonstop),
        "DESLLlt": mean0(let_lemma),
        "DESLLltd": pstd(let_lemma),
    }


def is_personal_pronoun(t: Token) -> bool:
    return t.upos == "PRON" and t.morph.get("PronType") == "Prs"


def word_information(doc: Document) -> dict[str, float]:
    """Counts and incidences for the main word classes and pronoun splits.

    Nouns cover NOUN and PROPN; verbs are VERB only (auxiliaries are not
    main verbs); pronoun person/number splits read the Person and Number
    morphological features of personal pronouns.
    """
    words = _words(doc)
    wc = len(words)
    tokens = [t for s in doc.sentences for t in s.tokens]

    content = sum(1 for t in tokens if t.is_content_word)
    nouns = sum(1 for t in tokens if t.upos in ("NOUN", "PROPN"))
    verbs = sum(1 for t in tokens if t.upos == "VERB")
    adjs = sum(1 for t in tokens if t.upos == "ADJ")
    advs = sum(1 for t in tokens if t.upos == "ADV")
    prons = [t for t in tokens if is_personal_pronoun(t)]

    def split(person: str, number: str) -> int:
        return sum(1 for t in prons
                   if t.morph.get("Person") == person and t.morph.get("Number") == number)

    out: dict[str, float] = {}
    for code, count in (("WRDCONT", content), ("WRDNOUN", nouns),
                        ("WRDVERB", verbs), ("WRDADJ", adjs),
                        ("WRDADV", advs), ("WRDPRO", len(prons))):
        out[code + "c"] = float(count)
        out[code] = incidence(count, wc)
    for code, person, number in (("WRDPRP1s", "1", "Sing"), ("WRDPRP1p", "1", "Plur"),
                                 ("WRDPRP2s", "2", "Sing"), ("WRDPRP2p", "2", "Plur"),
                                 ("WRDPRP3s", "3", "Sing"), ("WRDPRP3p", "3", "Plur")):
        count = split(person, number)
        out[code + "c"] = float(count)
        out[code] = incidence(count, wc)
    return out


def textual_simplicity(doc: Document) -> dict[str, float]:
    """Sentence-length band ratios: <11, 11-12, 13-14, >=15 words."""
    _words(doc)
    lens = [len(s.words()) for s in doc.sentences]
    n = len(lens)
    return {
        "TSSRsh": sum(1 for k in lens if k < 11) / n,
        "TSSRmd": sum(1 for k in lens if 11 <= k <= 12) / n,
        "TSSRlg": sum(1 for k in lens if 13 <= k <= 14) / n,
        "TSSRxl": sum(1 for k in lens if k >= 15) / n,
    }
