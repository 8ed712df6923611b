"""Annotated document model and CoNLL-U ingestion.

A Document is a list of Sentences grouped into paragraphs; a Sentence
is a list of Tokens carrying lemma, UPOS, morphology and dependency
annotations plus a syllable count. Documents are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from typing import IO, Iterator, Protocol

from .errors import AnnotatorFailure, EmptyDocument, MalformedConllu
from .syllables import syllable_count

CONTENT_UPOS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV"})

UPOS_TAGS = frozenset({
    "NOUN", "PROPN", "VERB", "AUX", "ADJ", "ADV", "PRON", "DET", "ADP",
    "CCONJ", "SCONJ", "NUM", "PART", "INTJ", "PUNCT", "SYM", "X",
})

_ID_RANGE = re.compile(r"^\d+-\d+$")
_ID_EMPTY = re.compile(r"^\d+\.\d+$")
_BLANK_SPLIT = re.compile(r"\n[ \t]*\n")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    lemma: str
    upos: str
    morph: dict[str, str]
    head: int            # 1-based index within the sentence, 0 = ROOT
    deprel: str
    syllables: int
    folded: str          # casefolded surface, cached for the hot paths
    lemma_folded: str
    letters: int         # alphabetic characters in the surface
    lemma_letters: int
    is_alphanumeric: bool
    is_content_word: bool
    is_stopword: bool


def make_token(surface: str, lemma: str, upos: str, morph: dict[str, str],
               head: int, deprel: str, stopwords: frozenset[str]) -> Token:
    folded = surface.casefold()
    lemma_folded = lemma.casefold()
    return Token(
        surface=surface,
        lemma=lemma,
        upos=upos,
        morph=morph,
        head=head,
        deprel=deprel,
        syllables=syllable_count(surface),
        folded=folded,
        lemma_folded=lemma_folded,
        letters=sum(1 for c in surface if c.isalpha()),
        lemma_letters=sum(1 for c in lemma if c.isalpha()),
        is_alphanumeric=any(c.isalnum() for c in surface),
        is_content_word=upos in CONTENT_UPOS,
        is_stopword=folded in stopwords,
    )


@dataclass(frozen=True, slots=True)
class Sentence:
    tokens: tuple[Token, ...]
    index: int

    def words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_alphanumeric]

    def content_words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_content_word]

    def root_position(self) -> int:
        """0-based index of the ROOT token."""
        for i, t in enumerate(self.tokens):
            if t.head == 0:
                return i
        raise ValueError("sentence has no root")  # unreachable after repair


@dataclass(frozen=True, slots=True)
class Document:
    sentences: tuple[Sentence, ...]
    paragraphs: tuple[tuple[int, int], ...]   # [start, end) sentence ranges
    source_id: str

    def words(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens if t.is_alphanumeric]

    def content_words(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens if t.is_content_word]

    def paragraph_sentences(self) -> Iterator[tuple[Sentence, ...]]:
        for start, end in self.paragraphs:
            yield self.sentences[start:end]


class AnnotatorContract(Protocol):
    """Raw-text annotator: UTF-8 text in, CoNLL-U bytes out."""

    def annotate(self, text: str) -> bytes: ...


# ---------------------------------------------------------------------------
# default stopword set, loaded lazily from the packaged data directory

_DEFAULT_STOPWORDS: frozenset[str] | None = None


def default_stopwords() -> frozenset[str]:
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        from .lexicons import load_stopwords, packaged_data_dir
        _DEFAULT_STOPWORDS = load_stopwords(packaged_data_dir() / "stopwords.txt")
    return _DEFAULT_STOPWORDS


# ---------------------------------------------------------------------------
# CoNLL-U ingestion

def _parse_morph(feats: str) -> dict[str, str]:
    if feats in ("_", ""):
        return {}
    morph = {}
    for item in feats.split("|"):
        key, _, value = item.partition("=")
        if key:
            morph[key] = value
    return morph


def _repair_roots(rows: list[dict]) -> None:
    """Force exactly one ROOT: first verb wins, else the first token.

    Also reattaches heads pointing outside the sentence. Metrics must be
    total over noisy parses, so repair never raises.
    """
    n = len(rows)
    roots = [i for i, r in enumerate(rows) if r["head"] == 0]
    if len(roots) != 1:
        root = next((i for i, r in enumerate(rows) if r["upos"] == "VERB"), 0)
        for i, r in enumerate(rows):
            if i == root:
                r["head"], r["deprel"] = 0, "root"
            elif r["head"] == 0:
                r["head"] = root + 1
                if r["deprel"] == "root":
                    r["deprel"] = "dep"
    root = next(i for i, r in enumerate(rows) if r["head"] == 0)
    for i, r in enumerate(rows):
        if r["head"] > n or (r["head"] < 0):
            r["head"] = root + 1 if i != root else 0


def _decode(data: bytes | str | IO) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    if isinstance(data, str):
        return data
    raw = data.read()
    return raw.decode("utf-8") if isinstance(raw, bytes) else raw


def ingest_conllu(data: bytes | str | IO, source_id: str = "",
                  stopwords: frozenset[str] | None = None) -> Document:
    """Parse CoNLL-U into a Document.

    Sentences end at blank lines; paragraphs start at ``# newpar``
    comments or double blank lines. Multiword-token ranges are expanded
    into their component word lines; enhanced-UD empty nodes (decimal
    ids) are dropped. Raises MalformedConllu on a line with the wrong
    column count and EmptyDocument if no sentence carries an
    alphanumeric token.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    text = _decode(data)

    sentences: list[Sentence] = []
    par_starts: set[int] = set()
    current: list[dict] = []
    blank_run = 0
    newpar_pending = False

    def close_sentence() -> None:
        nonlocal current, newpar_pending
        if not current:
            return
        _repair_roots(current)
        tokens = tuple(
            make_token(r["surface"], r["lemma"], r["upos"], r["morph"],
                       r["head"], r["deprel"], stopwords)
            for r in current
        )
        if newpar_pending and sentences:
            par_starts.add(len(sentences))
        newpar_pending = False
        sentences.append(Sentence(tokens=tokens, index=len(sentences)))
        current = []

    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            close_sentence()
            blank_run += 1
            if blank_run >= 2:
                newpar_pending = True
            continue
        blank_run = 0
        if stripped.startswith("#"):
            if stripped[1:].strip().startswith("newpar"):
                newpar_pending = True
            continue
        cols = line.rstrip("\n").split("\t")
        if len(cols) != 10:
            raise MalformedConllu(line_no, f"expected 10 columns, got {len(cols)}")
        tid = cols[0]
        if _ID_RANGE.match(tid) or _ID_EMPTY.match(tid):
            continue  # range lines are expanded by their word lines; empty nodes dropped
        try:
            head = 0 if cols[6] == "_" else int(cols[6])
        except ValueError as exc:
            raise MalformedConllu(line_no, f"bad HEAD {cols[6]!r}") from exc
        current.append({
            "surface": cols[1],
            "lemma": cols[2] if cols[2] != "_" else cols[1],
            "upos": cols[3] if cols[3] in UPOS_TAGS else "X",
            "morph": _parse_morph(cols[5]),
            "head": head,
            "deprel": cols[7] if cols[7] != "_" else "dep",
        })
    close_sentence()

    if not any(t.is_alphanumeric for s in sentences for t in s.tokens):
        raise EmptyDocument(f"no alphanumeric token in {source_id or 'input'}")

    breaks = sorted(par_starts)
    bounds = [0, *breaks, len(sentences)]
    paragraphs = tuple(
        (bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)
        if bounds[i] < bounds[i + 1]
    )
    return Document(sentences=tuple(sentences), paragraphs=paragraphs,
                    source_id=source_id)


def to_conllu(doc: Document) -> str:
    """Serialize back to CoNLL-U; ingest(to_conllu(d)) == d field-by-field."""
    out = io.StringIO()
    starts = {start for start, _ in doc.paragraphs}
    for i, sent in enumerate(doc.sentences):
        if i in starts:
            out.write("# newpar\n")
        for tid, t in enumerate(sent.tokens, start=1):
            feats = "|".join(f"{k}={v}" for k, v in sorted(t.morph.items())) or "_"
            out.write(f"{tid}\t{t.surface}\t{t.lemma}\t{t.upos}\t_\t{feats}\t{t.head}\t{t.deprel}\t_\t_\n")
        out.write("\n")
    return out.getvalue()


def annotate(raw: str, annotator: AnnotatorContract, source_id: str = "",
             stopwords: frozenset[str] | None = None) -> Document:
    """Annotate raw text through the pluggable contract and ingest it.

    Paragraphs are split on blank lines before annotation, so the
    annotator never needs paragraph semantics of its own.
    """
    chunks = [c for c in _BLANK_SPLIT.split(raw) if c.strip()]
    if not chunks:
        raise EmptyDocument(f"empty raw text in {source_id or 'input'}")
    blocks = []
    for chunk in chunks:
        try:
            piece = annotator.annotate(chunk)
        except AnnotatorFailure:
            raise
        except Exception as exc:
            raise AnnotatorFailure(f"annotator failed: {exc}") from exc
        blocks.append("# newpar\n" + piece.decode("utf-8").strip())
    return ingest_conllu("\n\n".join(blocks) + "\n", source_id=source_id,
                         stopwords=stopwords)
