import pytest

from metrix.doc import Document, Sentence, make_token
from metrix.lexicons import load_bundle


@pytest.fixture(scope="session")
def bundle():
    return load_bundle()


@pytest.fixture(scope="session")
def stopwords(bundle):
    return bundle.stopwords


def T(surface, upos="NOUN", lemma=None, head=0, deprel="root", morph=None,
      stopwords=frozenset()):
    """Quick token builder for hand-written fixtures."""
    return make_token(surface, lemma if lemma is not None else surface.casefold(),
                      upos, morph or {}, head, deprel, stopwords)


def sent(tokens, index=0):
    return Sentence(tokens=tuple(tokens), index=index)


def doc(sentences, paragraphs=None, source_id="fixture"):
    if paragraphs is None:
        paragraphs = ((0, len(sentences)),)
    return Document(sentences=tuple(sentences), paragraphs=tuple(paragraphs),
                    source_id=source_id)


def simple_sentence(words, index=0, upos="NOUN", stopwords=frozenset()):
    """One-verbless-root sentence from bare word surfaces."""
    tokens = [T(w, upos=upos, head=0 if i == 0 else 1,
                deprel="root" if i == 0 else "dep", stopwords=stopwords)
              for i, w in enumerate(words)]
    return sent(tokens, index=index)


def word_doc(*sentences_words, stopwords=frozenset(), source_id="fixture"):
    """Document of plain NOUN sentences; enough for surface metrics."""
    sentences = [simple_sentence(ws, index=i, stopwords=stopwords)
                 for i, ws in enumerate(sentences_words)]
    return doc(sentences, source_id=source_id)


class StubAnnotator:
    """Echo annotator: whitespace/punct tokens, everything a NOUN.

    The first token roots the sentence; sentences split on [.!?].
    """

    def annotate(self, text: str) -> bytes:
        import re

        out = []
        for sent_text in re.split(r"(?<=[.!?])\s+", text.strip()):
            tokens = re.findall(r"\w+|[^\w\s]", sent_text)
            lines = []
            for i, tok in enumerate(tokens, start=1):
                upos = "PUNCT" if not any(c.isalnum() for c in tok) else "NOUN"
                head = 0 if i == 1 else 1
                rel = "root" if i == 1 else "dep"
                lines.append(f"{i}\t{tok}\t{tok.lower()}\t{upos}\t_\t_\t{head}\t{rel}\t_\t_")
            if lines:
                out.append("\n".join(lines))
        return ("\n\n".join(out) + "\n").encode()
