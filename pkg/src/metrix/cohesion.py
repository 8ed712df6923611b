"""Referential and semantic cohesion between sentences and paragraphs.

Referential overlap works on lemmas, pronoun surfaces, and stems;
semantic overlap is cosine similarity in an embedding space supplied
through the EmbeddingProvider contract. The shipped default provider is
a deterministic hashed term-frequency vector, so tests and batch runs
are hermetic; production users can load a dense matrix from disk.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol, Sequence

import numpy as np

from .doc import Document, Sentence
from .errors import ProviderFailure
from .stats import mean0, pstd
from .stemmer import stem

OVERLAP_KINDS = ("noun", "argument", "stem", "content_word", "anaphor")

_NOUN_UPOS = ("NOUN", "PROPN")
_ANAPHOR_PRONTYPES = ("Prs", "Dem")


class EmbeddingProvider(Protocol):
    """Deterministic token-sequence -> fixed-dimension vector contract."""

    name: str

    def embed(self, tokens: Sequence[str]) -> np.ndarray: ...


class HashedTfEmbedding:
    """Term-frequency vector over a fixed hashed vocabulary.

    Hash-based indexing (BLAKE2, not Python's salted hash) keeps the
    mapping stable across processes and platforms.
    """

    def __init__(self, dim: int = 256):
        if dim < 2:
            raise ValueError("embedding dimension must be >= 2")
        self.dim = dim
        self.name = f"hashed-tf-{dim}"

    def _index(self, token: str) -> int:
        digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "little") % self.dim

    def embed(self, tokens: Sequence[str]) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.float64)
        for token in tokens:
            vec[self._index(token)] += 1.0
        return vec


class MatrixEmbedding:
    """Dense vectors from a float32 row-major matrix plus a vocab sidecar.

    The matrix file holds d * |V| little-endian float32 values; the
    sidecar (<matrix>.vocab.tsv by default) maps word -> row index. A
    sequence embeds as the mean of its known word vectors.
    """

    def __init__(self, matrix_path: str | Path, vocab_path: str | Path | None = None):
        matrix_path = Path(matrix_path)
        if vocab_path is None:
            vocab_path = matrix_path.with_suffix(matrix_path.suffix + ".vocab.tsv")
        self.vocab: dict[str, int] = {}
        with open(vocab_path, encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                word, _, ix = line.rstrip("\n").partition("\t")
                self.vocab[word.casefold()] = int(ix)
        raw = np.fromfile(matrix_path, dtype="<f4")
        size = len(self.vocab)
        if size == 0 or raw.size % size != 0:
            raise ValueError(f"matrix size {raw.size} is not a multiple of vocab size {size}")
        top = max(self.vocab.values())
        if top >= size:
            raise ValueError(f"vocab row index {top} outside the {size}-row matrix")
        self.dim = raw.size // size
        if self.dim < 2:
            raise ValueError("embedding dimension must be >= 2")
        self.matrix = raw.reshape(size, self.dim).astype(np.float64)
        self.name = f"matrix-{matrix_path.name}-{self.dim}d"

    def embed(self, tokens: Sequence[str]) -> np.ndarray:
        rows = [self.matrix[self.vocab[t]] for t in tokens if t in self.vocab]
        if not rows:
            return np.zeros(self.dim, dtype=np.float64)
        return np.mean(rows, axis=0)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity; 0 when either operand is the zero vector."""
    nu = math.sqrt(float(u @ u))
    nv = math.sqrt(float(v @ v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(u @ v) / (nu * nv)


# ---------------------------------------------------------------------------
# referential cohesion

@dataclass(frozen=True)
class _SentenceView:
    noun_lemmas: frozenset[str]
    pronoun_surfaces: frozenset[str]
    content_lemmas: frozenset[str]
    noun_stems: frozenset[str]
    content_stems: frozenset[str]
    has_nominal: bool
    has_anaphor_pronoun: bool


def _view(sentence: Sentence) -> _SentenceView:
    nouns = [t for t in sentence.tokens if t.upos in _NOUN_UPOS]
    content = [t for t in sentence.tokens if t.is_content_word]
    prs = [t for t in sentence.tokens
           if t.upos == "PRON" and t.morph.get("PronType") == "Prs"]
    anaphoric = any(t.upos == "PRON" and t.morph.get("PronType") in _ANAPHOR_PRONTYPES
                    for t in sentence.tokens)
    return _SentenceView(
        noun_lemmas=frozenset(t.lemma_folded for t in nouns),
        pronoun_surfaces=frozenset(t.folded for t in prs),
        content_lemmas=frozenset(t.lemma_folded for t in content),
        noun_stems=frozenset(stem(t.folded) for t in nouns),
        content_stems=frozenset(stem(t.folded) for t in content),
        has_nominal=bool(nouns) or any(t.upos == "PRON" for t in sentence.tokens),
        has_anaphor_pronoun=anaphoric,
    )


def _overlap(a: _SentenceView, b: _SentenceView, kind: str) -> float:
    if kind == "noun":
        return 1.0 if a.noun_lemmas & b.noun_lemmas else 0.0
    if kind == "argument":
        if a.noun_lemmas & b.noun_lemmas or a.pronoun_surfaces & b.pronoun_surfaces:
            return 1.0
        return 0.0
    if kind == "stem":
        # directional: later sentence's nouns against earlier content words
        return 1.0 if b.noun_stems & a.content_stems else 0.0
    if kind == "content_word":
        shared = len(a.content_lemmas & b.content_lemmas)
        low = min(len(a.content_lemmas), len(b.content_lemmas))
        return shared / max(1, low)
    if kind == "anaphor":
        return 1.0 if b.has_anaphor_pronoun and a.has_nominal else 0.0
    raise ValueError(f"unknown overlap kind {kind!r}")


def pair_overlap(a: Sentence, b: Sentence, kind: str) -> float:
    """Overlap of one ordered sentence pair (``a`` earlier, ``b`` later).

    noun/argument/content_word are symmetric; stem and anaphor read
    direction (no coreference pass, pronoun presence is the proxy).
    """
    return _overlap(_view(a), _view(b), kind)


def referential_cohesion(doc: Document) -> dict[str, float]:
    """The 12 referential metrics over adjacent and all sentence pairs."""
    sentences = doc.sentences
    codes = {
        "noun": ("CRFNO1", "CRFNOa"),
        "argument": ("CRFAO1", "CRFAOa"),
        "stem": ("CRFSO1", "CRFSOa"),
        "content_word": ("CRFCWO1", "CRFCWOa"),
        "anaphor": ("CRFANP1", "CRFANPa"),
    }
    out: dict[str, float] = {}
    if len(sentences) < 2:
        for adj_code, all_code in codes.values():
            out[adj_code] = out[all_code] = 0.0
        out["CRFCWO1d"] = out["CRFCWOad"] = 0.0
        return out

    views = [_view(s) for s in sentences]
    adjacent = list(zip(views, views[1:]))
    all_pairs = [(views[i], views[j])
                 for i in range(len(views)) for j in range(i + 1, len(views))]
    for kind, (adj_code, all_code) in codes.items():
        adj_vals = [_overlap(a, b, kind) for a, b in adjacent]
        all_vals = [_overlap(a, b, kind) for a, b in all_pairs]
        out[adj_code] = mean0(adj_vals)
        out[all_code] = mean0(all_vals)
        if kind == "content_word":
            out["CRFCWO1d"] = pstd(adj_vals)
            out["CRFCWOad"] = pstd(all_vals)
    return out


# ---------------------------------------------------------------------------
# semantic cohesion

def _sentence_vector(sentence: Sentence, provider: EmbeddingProvider) -> np.ndarray:
    lemmas = [t.lemma_folded for t in sentence.tokens if t.is_content_word]
    try:
        return np.asarray(provider.embed(lemmas), dtype=np.float64)
    except Exception as exc:
        raise ProviderFailure(f"provider {getattr(provider, 'name', '?')} failed: {exc}") from exc


def semantic_cohesion(doc: Document, provider: EmbeddingProvider) -> dict[str, float]:
    """Cosine overlaps: adjacent/all sentences, adjacent paragraphs, given/new.

    Sentences embed from their content-word lemmas; a paragraph vector is
    the mean of its sentence vectors; given/new compares each sentence to
    the running mean of everything before it.
    """
    vectors = [_sentence_vector(s, provider) for s in doc.sentences]

    adj = [cosine(u, v) for u, v in zip(vectors, vectors[1:])]
    alls = [cosine(vectors[i], vectors[j])
            for i in range(len(vectors)) for j in range(i + 1, len(vectors))]

    par_vecs = [np.mean(vectors[start:end], axis=0)
                for start, end in doc.paragraphs]
    par_adj = [cosine(u, v) for u, v in zip(par_vecs, par_vecs[1:])]

    given_new = []
    for k in range(1, len(vectors)):
        given = np.mean(vectors[:k], axis=0)
        given_new.append(cosine(vectors[k], given))

    return {
        "SECLOSadj": mean0(adj), "SECLOSadjd": pstd(adj),
        "SECLOSall": mean0(alls), "SECLOSalld": pstd(alls),
        "SECLOPadj": mean0(par_adj), "SECLOPadjd": pstd(par_adj),
        "SECLOSgiv": mean0(given_new), "SECLOSgivd": pstd(given_new),
    }
