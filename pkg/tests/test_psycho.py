import pytest

from conftest import T, doc, sent, word_doc
from metrix.lexicons import (ConnectiveSets, FrequencyTable, NormEntry,
                             NormsTable)
from metrix.psycho import (connective_incidence, psycholinguistic_ratios,
                           word_frequency_metrics)

DIMS = ("PSYC", "PSYIM", "PSYFM", "PSYAoA", "PSYARO", "PSYVAL")


def norms(**entries):
    return NormsTable(entries={k: NormEntry(**v) for k, v in entries.items()})


def content_doc(*lemmas):
    tokens = [T(lemma, "NOUN", head=0 if i == 0 else 1,
                deprel="root" if i == 0 else "dep")
              for i, lemma in enumerate(lemmas)]
    return doc([sent(tokens)])


class TestPsycholinguistics:
    def test_single_covered_word_high_concreteness(self):
        table = norms(mesa={"concreteness": 6.0})
        m, coverage = psycholinguistic_ratios(content_doc("mesa"), table)
        assert m["PSYC3"] == 1.0
        assert m["PSYC0"] == m["PSYC1"] == m["PSYC2"] == 0.0
        assert m["PSYC"] == pytest.approx(6.0 / 7.0)
        assert coverage == 1.0

    def test_fully_oov_document(self):
        m, coverage = psycholinguistic_ratios(content_doc("qqq", "zzz"), norms())
        assert coverage == 0.0
        assert all(v == 0.0 for v in m.values())
        assert len(m) == 30

    def test_aoa_two_words(self):
        table = norms(uno={"age_of_acquisition": 2.0},
                      dos={"age_of_acquisition": 6.0})
        m, _ = psycholinguistic_ratios(content_doc("uno", "dos"), table)
        assert m["PSYAoA0"] == 0.5
        assert m["PSYAoA3"] == 0.5
        assert m["PSYAoA"] == pytest.approx((2.0 + 6.0) / 2 / 7.0)

    def test_nine_scale_bins(self):
        table = norms(a={"valence": 2.9}, b={"valence": 3.0},
                      c={"valence": 6.9}, d={"valence": 8.5})
        m, _ = psycholinguistic_ratios(content_doc("a", "b", "c", "d"), table)
        assert m["PSYVAL0"] == 0.25
        assert m["PSYVAL1"] == 0.25
        assert m["PSYVAL2"] == 0.25
        assert m["PSYVAL3"] == 0.25

    def test_boundaries_half_open(self):
        table = norms(a={"concreteness": 2.5}, b={"concreteness": 7.0})
        m, _ = psycholinguistic_ratios(content_doc("a", "b"), table)
        assert m["PSYC1"] == 0.5     # 2.5 goes to the second bin
        assert m["PSYC3"] == 0.5     # the final edge is closed

    def test_bins_partition_coverage(self):
        table = norms(**{f"w{i}": {"imageability": 1.0 + i * 0.37}
                         for i in range(17)})
        d = content_doc(*[f"w{i}" for i in range(17)])
        m, _ = psycholinguistic_ratios(d, table)
        assert sum(m[f"PSYIM{k}"] for k in range(4)) == pytest.approx(1.0)

    def test_partial_entries_per_dimension_coverage(self):
        table = norms(a={"concreteness": 6.0}, b={"valence": 8.0})
        m, coverage = psycholinguistic_ratios(content_doc("a", "b"), table)
        assert coverage == 1.0
        assert m["PSYC3"] == 1.0      # only word a covers concreteness
        assert m["PSYVAL3"] == 1.0    # only word b covers valence

    def test_lemma_first_surface_fallback(self):
        table = norms(correr={"concreteness": 3.0})
        tokens = [T("corre", "VERB", "correr", head=0, deprel="root",
                    morph={"VerbForm": "Fin"})]
        m, coverage = psycholinguistic_ratios(doc([sent(tokens)]), table)
        assert coverage == 1.0
        assert m["PSYC"] == pytest.approx(3.0 / 7.0)

    def test_only_content_words_counted(self):
        table = norms(de={"concreteness": 6.0})
        tokens = [T("casa", "NOUN", head=0, deprel="root"),
                  T("de", "ADP", head=1, deprel="case")]
        _, coverage = psycholinguistic_ratios(doc([sent(tokens)]), table)
        assert coverage == 0.0  # "de" is not a content word; "casa" uncovered


def freq(**values):
    return FrequencyTable({k: float(v) for k, v in values.items()})


def tagged_doc(rows):
    """rows: list of sentences, each a list of (surface, upos)."""
    sentences = []
    for ix, row in enumerate(rows):
        tokens = [T(sf, upos, head=0 if i == 0 else 1,
                    deprel="root" if i == 0 else "dep")
                  for i, (sf, upos) in enumerate(row)]
        sentences.append(sent(tokens, index=ix))
    return doc(sentences)


class TestWordFrequency:
    def test_no_rare_words(self):
        table = freq(casa=5.0, sol=6.0)
        m = word_frequency_metrics(word_doc(["casa", "sol"]), table)
        for code in ("WFRCno", "WFRCvb", "WFRCadj", "WFRCadv", "WFRCcw",
                     "WFRCcwd"):
            assert m[code] == 0.0

    def test_sentence_minimum(self):
        table = freq(a=6.1, b=3.2, c=5.0)
        d = tagged_doc([[("a", "NOUN"), ("b", "NOUN"), ("c", "NOUN")]])
        m = word_frequency_metrics(d, table)
        assert m["WFMrw"] == pytest.approx(3.2)
        assert m["WFMw"] == pytest.approx((6.1 + 3.2 + 5.0) / 3)

    def test_oov_dominates_minimum_and_counts_rare(self):
        table = freq(casa=5.0)
        d = tagged_doc([[("casa", "NOUN"), ("zzgib", "NOUN")]])
        m = word_frequency_metrics(d, table)
        assert m["WFMrw"] == 0.0
        assert m["WFRCno"] == 1.0
        assert m["WFRCcwd"] == 1.0

    def test_class_split(self):
        table = freq(casa=5.0)
        d = tagged_doc([[("casa", "NOUN"), ("raro1", "VERB"), ("raro2", "ADJ"),
                         ("raro3", "ADV"), ("raro4", "PROPN")]])
        m = word_frequency_metrics(d, table)
        assert m["WFRCno"] == 1.0    # the PROPN
        assert m["WFRCvb"] == 1.0
        assert m["WFRCadj"] == 1.0
        assert m["WFRCadv"] == 1.0
        assert m["WFRCcw"] == 4.0

    def test_distinct_rare_types(self):
        table = freq()
        d = tagged_doc([[("raro", "NOUN"), ("raro", "NOUN"), ("otro", "NOUN")]])
        m = word_frequency_metrics(d, table)
        assert m["WFRCcw"] == 3.0
        assert m["WFRCcwd"] == 2.0

    def test_threshold_monotonicity(self):
        table = freq(a=2.0, b=4.5, c=6.5)
        d = tagged_doc([[("a", "NOUN"), ("b", "NOUN"), ("c", "NOUN")]])
        counts = [word_frequency_metrics(d, table, rare_threshold=t)["WFRCno"]
                  for t in (1.0, 3.0, 5.0, 7.0)]
        assert counts == sorted(counts)

    def test_rcw_skips_contentless_sentences(self):
        table = freq(de=6.0, casa=5.0)
        d = tagged_doc([[("de", "ADP")], [("casa", "NOUN")]])
        m = word_frequency_metrics(d, table)
        assert m["WFMrcw"] == pytest.approx(5.0)
        assert m["WFMrw"] == pytest.approx(5.5)

    def test_incidence_relation(self):
        table = freq(casa=5.0)
        d = tagged_doc([[("casa", "NOUN"), ("rarito", "NOUN"), ("x", "ADV")]])
        m = word_frequency_metrics(d, table)
        for count_code, inc_code in (("WFRCno", "WFRCnoi"), ("WFRCvb", "WFRCvbi"),
                                     ("WFRCadj", "WFRCadji"), ("WFRCadv", "WFRCadvi"),
                                     ("WFRCcw", "WFRCcwi"), ("WFRCcwd", "WFRCcwdi")):
            assert m[inc_code] == pytest.approx(1000.0 * m[count_code] / 3)


def sets(**kwargs):
    empty = frozenset()
    fields = {c: empty for c in ("causal", "logical", "adversative",
                                 "temporal", "additive")}
    fields.update({k: frozenset(tuple(p.split()) for p in v)
                   for k, v in kwargs.items()})
    return ConnectiveSets(**fields)


class TestConnectiveIncidence:
    def test_pero_in_ten_words(self):
        d = word_doc(["pero"] + [f"w{i}" for i in range(9)])
        m = connective_incidence(d, sets(adversative=["pero"]))
        assert m["CNCADC"] == 100.0
        assert m["CNCAll"] >= 100.0

    def test_no_connectives(self):
        m = connective_incidence(word_doc(["casa", "sol"]), sets())
        assert all(v == 0.0 for v in m.values())

    def test_two_word_phrase_in_twenty_words(self):
        d = word_doc(["sin", "embargo"] + [f"w{i}" for i in range(18)])
        m = connective_incidence(d, sets(adversative=["sin embargo"]))
        assert m["CNCADC"] == 50.0

    def test_double_counted_in_all(self):
        d = word_doc(["luego"] + [f"w{i}" for i in range(9)])
        m = connective_incidence(d, sets(logical=["luego"], temporal=["luego"]))
        assert m["CNCLogic"] == 100.0
        assert m["CNCTemp"] == 100.0
        assert m["CNCAll"] == 200.0

    def test_all_at_least_max_category(self):
        d = word_doc(["pero", "y", "cuando", "casa"])
        m = connective_incidence(d, sets(adversative=["pero"], additive=["y"],
                                         temporal=["cuando"]))
        top = max(m["CNCCaus"], m["CNCLogic"], m["CNCADC"], m["CNCTemp"], m["CNCAdd"])
        assert m["CNCAll"] >= top
