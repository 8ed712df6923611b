import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import StubAnnotator
from metrix.doc import annotate, ingest_conllu, to_conllu
from metrix.errors import AnnotatorFailure, EmptyDocument, MalformedConllu
from metrix.synth import synth_document

EMPTY = frozenset()


def line(i, form, lemma=None, upos="NOUN", feats="_", head=1, deprel="dep"):
    lemma = lemma or form.lower()
    if i == 1 and head == 1:
        head, deprel = 0, "root"
    return f"{i}\t{form}\t{lemma}\t{upos}\t_\t{feats}\t{head}\t{deprel}\t_\t_"


TWO_SENTENCES = "\n".join([
    line(1, "Hola"), line(2, "mundo"), "",
    line(1, "Adiós"),
]) + "\n"


def test_two_sentences_one_paragraph():
    doc = ingest_conllu(TWO_SENTENCES, stopwords=EMPTY)
    assert len(doc.sentences) == 2
    assert doc.paragraphs == ((0, 2),)


def test_newpar_marker_splits_paragraphs():
    text = "\n".join([line(1, "Hola"), "", "# newpar", line(1, "Adiós")]) + "\n"
    doc = ingest_conllu(text, stopwords=EMPTY)
    assert doc.paragraphs == ((0, 1), (1, 2))


def test_double_blank_line_splits_paragraphs():
    text = "\n".join([line(1, "Hola"), "", "", line(1, "Adiós")]) + "\n"
    doc = ingest_conllu(text, stopwords=EMPTY)
    assert doc.paragraphs == ((0, 1), (1, 2))


def test_leading_newpar_is_not_an_extra_paragraph():
    text = "# newpar\n" + TWO_SENTENCES
    doc = ingest_conllu(text, stopwords=EMPTY)
    assert doc.paragraphs == ((0, 2),)


def test_nine_columns_malformed():
    bad = "1\tHola\thola\tNOUN\t_\t_\t0\troot\t_"  # 9 columns
    with pytest.raises(MalformedConllu) as err:
        ingest_conllu(bad + "\n", stopwords=EMPTY)
    assert err.value.line_no == 1


def test_empty_document():
    with pytest.raises(EmptyDocument):
        ingest_conllu("", stopwords=EMPTY)
    with pytest.raises(EmptyDocument):
        ingest_conllu("1\t.\t.\tPUNCT\t_\t_\t0\troot\t_\t_\n", stopwords=EMPTY)


def test_multiword_token_expansion():
    text = "\n".join([
        "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_",
        "1\tde\tde\tADP\t_\t_\t3\tcase",
        "2\tel\tel\tDET\t_\t_\t3\tdet",
        "3\tperro\tperro\tNOUN\t_\t_\t0\troot",
    ])
    text = "\n".join(l if l.count("\t") == 9 else l + "\t_\t_" for l in text.splitlines())
    doc = ingest_conllu(text + "\n", stopwords=EMPTY)
    assert [t.surface for t in doc.sentences[0].tokens] == ["de", "el", "perro"]


def test_empty_nodes_dropped():
    text = "\n".join([
        line(1, "Hola"),
        "1.1\tfantasma\tfantasma\tNOUN\t_\t_\t_\t_\t_\t_",
    ]) + "\n"
    doc = ingest_conllu(text, stopwords=EMPTY)
    assert len(doc.sentences[0].tokens) == 1


def test_morph_features_parsed():
    text = line(1, "corro", "correr", "VERB", "Number=Sing|Person=1") + "\n"
    doc = ingest_conllu(text, stopwords=EMPTY)
    tok = doc.sentences[0].tokens[0]
    assert tok.morph == {"Number": "Sing", "Person": "1"}
    assert tok.is_content_word and tok.is_alphanumeric


def test_syllables_populated():
    doc = ingest_conllu(line(1, "ejemplo") + "\n", stopwords=EMPTY)
    assert doc.sentences[0].tokens[0].syllables == 3


class TestRootRepair:
    def test_zero_roots_first_verb_wins(self):
        text = "\n".join([
            "1\tel\tel\tDET\t_\t_\t2\tdet\t_\t_",
            "2\tperro\tperro\tNOUN\t_\t_\t3\tnsubj\t_\t_",
            "3\tcorre\tcorrer\tVERB\t_\t_\t2\tdep\t_\t_",
        ]) + "\n"
        doc = ingest_conllu(text, stopwords=EMPTY)
        sent = doc.sentences[0]
        assert sent.root_position() == 2
        assert sum(1 for t in sent.tokens if t.head == 0) == 1

    def test_multiple_roots_collapsed(self):
        text = "\n".join([
            "1\tperro\tperro\tNOUN\t_\t_\t0\troot\t_\t_",
            "2\tcorre\tcorrer\tVERB\t_\t_\t0\troot\t_\t_",
        ]) + "\n"
        doc = ingest_conllu(text, stopwords=EMPTY)
        sent = doc.sentences[0]
        assert sent.root_position() == 1  # the verb
        assert sent.tokens[0].head == 2

    def test_out_of_range_head_reattached(self):
        text = "\n".join([
            line(1, "corre", "correr", "VERB"),
            "2\tperro\tperro\tNOUN\t_\t_\t9\tnsubj\t_\t_",
        ]) + "\n"
        doc = ingest_conllu(text, stopwords=EMPTY)
        assert doc.sentences[0].tokens[1].head == 1

    def test_every_synth_sentence_has_one_root(self):
        for seed in range(20):
            doc = ingest_conllu(synth_document(seed), stopwords=EMPTY)
            for sent in doc.sentences:
                assert sum(1 for t in sent.tokens if t.head == 0) == 1


class TestRoundTrip:
    def assert_identical(self, a, b):
        assert a.paragraphs == b.paragraphs
        assert len(a.sentences) == len(b.sentences)
        for sa, sb in zip(a.sentences, b.sentences):
            assert sa.tokens == sb.tokens

    def test_hand_fixture(self):
        text = "\n".join([
            "# newpar",
            line(1, "Hola", upos="INTJ"),
            line(2, "mundo", feats="Gender=Masc|Number=Sing"),
            "",
            "# newpar",
            line(1, "Adiós"),
        ]) + "\n"
        doc = ingest_conllu(text, stopwords=EMPTY)
        again = ingest_conllu(to_conllu(doc), stopwords=EMPTY)
        self.assert_identical(doc, again)

    @pytest.mark.parametrize("seed", range(10))
    def test_synth_documents(self, seed, stopwords):
        doc = ingest_conllu(synth_document(seed), stopwords=stopwords)
        again = ingest_conllu(to_conllu(doc), stopwords=stopwords)
        self.assert_identical(doc, again)


@given(st.permutations(["hola", "mundo", "ejemplo", "país", "guía"]))
def test_sentence_syllable_sum_order_invariant(words):
    text = "\n".join(line(i + 1, w, head=1 if i else 0,
                          deprel="dep" if i else "root")
                     for i, w in enumerate(words)) + "\n"
    doc = ingest_conllu(text, stopwords=EMPTY)
    total = sum(t.syllables for t in doc.sentences[0].tokens)
    assert total == 11  # hola=2 mundo=2 ejemplo=3 país=2 guía=2

def test_fixed_syllable_total():
    # anchor for the permutation test above
    from metrix.syllables import syllable_count
    assert sum(map(syllable_count, ["hola", "mundo", "ejemplo", "país", "guía"])) == 11


class TestAnnotate:
    def test_stub_roundtrip(self):
        doc = annotate("Hola mundo.", StubAnnotator(), stopwords=EMPTY)
        assert len(doc.paragraphs) == 1
        assert len(doc.sentences) == 1
        assert [t.surface for t in doc.sentences[0].tokens] == ["Hola", "mundo", "."]

    def test_empty_raw(self):
        with pytest.raises(EmptyDocument):
            annotate("", StubAnnotator(), stopwords=EMPTY)

    def test_blank_line_paragraphs(self):
        doc = annotate("A.\n\nB.", StubAnnotator(), stopwords=EMPTY)
        assert len(doc.paragraphs) == 2

    def test_failure_wrapped(self):
        class Broken:
            def annotate(self, text):
                raise RuntimeError("boom")

        with pytest.raises(AnnotatorFailure):
            annotate("Hola.", Broken(), stopwords=EMPTY)
