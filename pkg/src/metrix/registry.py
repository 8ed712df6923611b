"""Static catalog of the 182 metrics: code, category, description, unit.

The registry is compile-time data, not configuration; column order in
every output, the grouped view, and the coverage tests all derive from
it, so the codes cannot drift apart between computation and
serialization.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, Mapping

from .errors import DuplicateMetric, MissingMetric, UnknownCategory, UnknownMetric

COUNT = "count"
INC = "incidence_per_1000"
RATIO = "ratio"
INDEX = "index"
DIST = "distance"


@dataclass(frozen=True)
class MetricDescriptor:
    code: str
    category: str
    description: str
    unit: str


def _d(code, category, description, unit) -> MetricDescriptor:
    return MetricDescriptor(code, category, description, unit)


_DESCRIPTIVE = [
    _d("DESPC", "Descriptive", "Paragraph count", COUNT),
    _d("DESPCi", "Descriptive", "Paragraph count incidence per 1000 words", INC),
    _d("DESSC", "Descriptive", "Sentence count", COUNT),
    _d("DESSCi", "Descriptive", "Sentence count incidence per 1000 words", INC),
    _d("DESWC", "Descriptive", "Word count (alphanumeric words)", COUNT),
    _d("DESWCU", "Descriptive", "Unique word count", COUNT),
    _d("DESWCUi", "Descriptive", "Unique word count incidence per 1000 words", INC),
    _d("DESPL", "Descriptive", "Average paragraph length (sentences per paragraph)", INDEX),
    _d("DESPLd", "Descriptive", "Standard deviation of paragraph length", INDEX),
    _d("DESSL", "Descriptive", "Average sentence length (words per sentence)", INDEX),
    _d("DESSLd", "Descriptive", "Standard deviation of sentence length", INDEX),
    _d("DESSNSL", "Descriptive", "Average sentence length excluding stopwords", INDEX),
    _d("DESSNSLd", "Descriptive", "Standard deviation of sentence length excluding stopwords", INDEX),
    _d("DESSLmax", "Descriptive", "Maximum sentence length", COUNT),
    _d("DESSLmin", "Descriptive", "Minimum sentence length", COUNT),
    _d("DESWLsy", "Descriptive", "Average syllables per word", INDEX),
    _d("DESWLsyd", "Descriptive", "Standard deviation of syllables per word", INDEX),
    _d("DESCWLsy", "Descriptive", "Average syllables per content word", INDEX),
    _d("DESCWLsyd", "Descriptive", "Standard deviation of syllables per content word", INDEX),
    _d("DESCWLlt", "Descriptive", "Average letters per content word", INDEX),
    _d("DESCWLltd", "Descriptive", "Standard deviation of letters per content word", INDEX),
    _d("DESWLlt", "Descriptive", "Average letters per word", INDEX),
    _d("DESWLltd", "Descriptive", "Standard deviation of letters per word", INDEX),
    _d("DESWNSLlt", "Descriptive", "Average letters per word (excluding stopwords)", INDEX),
    _d("DESWNSLltd", "Descriptive", "Standard deviation of letters per word (excluding stopwords)", INDEX),
    _d("DESLLlt", "Descriptive", "Average letters per lemma", INDEX),
    _d("DESLLltd", "Descriptive", "Standard deviation of letters per lemma", INDEX),
]

_READABILITY = [
    _d("RDFHGL", "Readability", "Fernandez-Huertas grade level", INDEX),
    _d("RDSPP", "Readability", "Szigriszt-Pazos perspicuity", INDEX),
    _d("RDMU", "Readability", "Readability mu index", INDEX),
    _d("RDSMOG", "Readability", "SMOG index", INDEX),
    _d("RDFOG", "Readability", "Gunning Fog index", INDEX),
    _d("RDHS", "Readability", "Honore statistic", INDEX),
    _d("RDBR", "Readability", "Brunet index", INDEX),
]

_REFERENTIAL = [
    _d("CRFNO1", "Referential Cohesion", "Noun overlap between adjacent sentences", RATIO),
    _d("CRFAO1", "Referential Cohesion", "Argument overlap between adjacent sentences", RATIO),
    _d("CRFSO1", "Referential Cohesion", "Stem overlap between adjacent sentences", RATIO),
    _d("CRFCWO1", "Referential Cohesion", "Content word overlap between adjacent sentences (mean)", RATIO),
    _d("CRFCWO1d", "Referential Cohesion", "Content word overlap between adjacent sentences (std dev)", RATIO),
    _d("CRFANP1", "Referential Cohesion", "Anaphor overlap between adjacent sentences", RATIO),
    _d("CRFNOa", "Referential Cohesion", "Noun overlap between all sentences", RATIO),
    _d("CRFAOa", "Referential Cohesion", "Argument overlap between all sentences", RATIO),
    _d("CRFSOa", "Referential Cohesion", "Stem overlap between all sentences", RATIO),
    _d("CRFCWOa", "Referential Cohesion", "Content word overlap between all sentences (mean)", RATIO),
    _d("CRFCWOad", "Referential Cohesion", "Content word overlap between all sentences (std dev)", RATIO),
    _d("CRFANPa", "Referential Cohesion", "Anaphor overlap between all sentences", RATIO),
]

_DIVERSITY = [
    _d("LDTTRa", "Lexical Diversity", "Type-token ratio for all words", RATIO),
    _d("LDTTRcw", "Lexical Diversity", "Type-token ratio for content words", RATIO),
    _d("LDTTRno", "Lexical Diversity", "Type-token ratio for nouns", RATIO),
    _d("LDTTRvb", "Lexical Diversity", "Type-token ratio for verbs", RATIO),
    _d("LDTTRadv", "Lexical Diversity", "Type-token ratio for adverbs", RATIO),
    _d("LDTTRadj", "Lexical Diversity", "Type-token ratio for adjectives", RATIO),
    _d("LDTTRLa", "Lexical Diversity", "Type-token ratio for all lemmas", RATIO),
    _d("LDTTRLno", "Lexical Diversity", "Type-token ratio for noun lemmas", RATIO),
    _d("LDTTRLvb", "Lexical Diversity", "Type-token ratio for verb lemmas", RATIO),
    _d("LDTTRLadv", "Lexical Diversity", "Type-token ratio for adverb lemmas", RATIO),
    _d("LDTTRLadj", "Lexical Diversity", "Type-token ratio for adjective lemmas", RATIO),
    _d("LDTTRLpron", "Lexical Diversity", "Type-token ratio for pronouns", RATIO),
    _d("LDTTRLrpron", "Lexical Diversity", "Type-token ratio for relative pronouns", RATIO),
    _d("LDTTRLipron", "Lexical Diversity", "Type-token ratio for indefinite pronouns", RATIO),
    _d("LDTTRLifn", "Lexical Diversity", "Type-token ratio for functional words", RATIO),
    _d("LDMLTD", "Lexical Diversity", "Measure of textual lexical diversity (MTLD)", INDEX),
    _d("LDVOCd", "Lexical Diversity", "Vocabulary complexity diversity (VOCd)", INDEX),
    _d("LDMaas", "Lexical Diversity", "Maas index", INDEX),
    _d("LDDno", "Lexical Diversity", "Noun density", RATIO),
    _d("LDDvb", "Lexical Diversity", "Verb density", RATIO),
    _d("LDDadv", "Lexical Diversity", "Adverb density", RATIO),
    _d("LDDadj", "Lexical Diversity", "Adjective density", RATIO),
]

_FREQUENCY = [
    _d("WFRCno", "Word Frequency", "Rare noun count", COUNT),
    _d("WFRCnoi", "Word Frequency", "Rare noun incidence per 1000 words", INC),
    _d("WFRCvb", "Word Frequency", "Rare verb count", COUNT),
    _d("WFRCvbi", "Word Frequency", "Rare verb incidence per 1000 words", INC),
    _d("WFRCadj", "Word Frequency", "Rare adjective count", COUNT),
    _d("WFRCadji", "Word Frequency", "Rare adjective incidence per 1000 words", INC),
    _d("WFRCadv", "Word Frequency", "Rare adverb count", COUNT),
    _d("WFRCadvi", "Word Frequency", "Rare adverb incidence per 1000 words", INC),
    _d("WFRCcw", "Word Frequency", "Rare content word count", COUNT),
    _d("WFRCcwi", "Word Frequency", "Rare content word incidence per 1000 words", INC),
    _d("WFRCcwd", "Word Frequency", "Distinct rare content word count", COUNT),
    _d("WFRCcwdi", "Word Frequency", "Distinct rare content word incidence per 1000 words", INC),
    _d("WFMcw", "Word Frequency", "Mean frequency of content words", INDEX),
    _d("WFMw", "Word Frequency", "Mean frequency of all words", INDEX),
    _d("WFMrw", "Word Frequency", "Mean frequency of rarest words per sentence", INDEX),
    _d("WFMrcw", "Word Frequency", "Mean frequency of rarest content words per sentence", INDEX),
]

_SEMANTIC = [
    _d("SECLOSadj", "Semantic Cohesion", "Semantic overlap between adjacent sentences (mean)", RATIO),
    _d("SECLOSadjd", "Semantic Cohesion", "Semantic overlap between adjacent sentences (std dev)", RATIO),
    _d("SECLOSall", "Semantic Cohesion", "Semantic overlap between all sentences (mean)", RATIO),
    _d("SECLOSalld", "Semantic Cohesion", "Semantic overlap between all sentences (std dev)", RATIO),
    _d("SECLOPadj", "Semantic Cohesion", "Semantic overlap between adjacent paragraphs (mean)", RATIO),
    _d("SECLOPadjd", "Semantic Cohesion", "Semantic overlap between adjacent paragraphs (std dev)", RATIO),
    _d("SECLOSgiv", "Semantic Cohesion", "Semantic overlap between given and new sentences (mean)", RATIO),
    _d("SECLOSgivd", "Semantic Cohesion", "Semantic overlap between given and new sentences (std dev)", RATIO),
]

_SYNTAX = [
    _d("SYNNP", "Syntactic Complexity", "Mean number of modifiers per noun phrase", INDEX),
    _d("SYNLE", "Syntactic Complexity", "Mean number of words before main verb", INDEX),
    _d("SYNMEDwrd", "Syntactic Complexity", "Minimal edit distance of words between adjacent sentences", DIST),
    _d("SYNMEDlem", "Syntactic Complexity", "Minimal edit distance of lemmas between adjacent sentences", DIST),
    _d("SYNMEDpos", "Syntactic Complexity", "Minimal edit distance of POS tags between adjacent sentences", DIST),
    _d("SYNCLS1", "Syntactic Complexity", "Ratio of sentences with 1 clause", RATIO),
    _d("SYNCLS2", "Syntactic Complexity", "Ratio of sentences with 2 clauses", RATIO),
    _d("SYNCLS3", "Syntactic Complexity", "Ratio of sentences with 3 clauses", RATIO),
    _d("SYNCLS4", "Syntactic Complexity", "Ratio of sentences with 4 clauses", RATIO),
    _d("SYNCLS5", "Syntactic Complexity", "Ratio of sentences with 5 clauses", RATIO),
    _d("SYNCLS6", "Syntactic Complexity", "Ratio of sentences with 6 clauses", RATIO),
    _d("SYNCLS7", "Syntactic Complexity", "Ratio of sentences with 7 clauses", RATIO),
]

_PATTERN = [
    _d("DRNP", "Pattern Density", "Noun phrase density per 1000 words", INC),
    _d("DRNPc", "Pattern Density", "Noun phrase count", COUNT),
    _d("DRVP", "Pattern Density", "Verb phrase density per 1000 words", INC),
    _d("DRVPc", "Pattern Density", "Verb phrase count", COUNT),
    _d("DRNEG", "Pattern Density", "Negation expression density per 1000 words", INC),
    _d("DRNEGc", "Pattern Density", "Negation expression count", COUNT),
    _d("DRGER", "Pattern Density", "Gerund form density per 1000 words", INC),
    _d("DRGERc", "Pattern Density", "Gerund count", COUNT),
    _d("DRINF", "Pattern Density", "Infinitive form density per 1000 words", INC),
    _d("DRINFc", "Pattern Density", "Infinitive count", COUNT),
    _d("DRCCONJ", "Pattern Density", "Coordinating conjunction density per 1000 words", INC),
    _d("DRCCONJc", "Pattern Density", "Coordinating conjunction count", COUNT),
    _d("DRSCONJ", "Pattern Density", "Subordinating conjunction density per 1000 words", INC),
    _d("DRSCONJc", "Pattern Density", "Subordinating conjunction count", COUNT),
]

_CONNECTIVES = [
    _d("CNCAll", "Connectives", "All connectives incidence per 1000 words", INC),
    _d("CNCCaus", "Connectives", "Causal connectives incidence per 1000 words", INC),
    _d("CNCLogic", "Connectives", "Logical connectives incidence per 1000 words", INC),
    _d("CNCADC", "Connectives", "Adversative connectives incidence per 1000 words", INC),
    _d("CNCTemp", "Connectives", "Temporal connectives incidence per 1000 words", INC),
    _d("CNCAdd", "Connectives", "Additive connectives incidence per 1000 words", INC),
]

_WORDINFO = [
    _d("WRDCONT", "Word Information", "Content word incidence per 1000 words", INC),
    _d("WRDCONTc", "Word Information", "Content word count", COUNT),
    _d("WRDNOUN", "Word Information", "Noun incidence per 1000 words", INC),
    _d("WRDNOUNc", "Word Information", "Noun count", COUNT),
    _d("WRDVERB", "Word Information", "Verb incidence per 1000 words", INC),
    _d("WRDVERBc", "Word Information", "Verb count", COUNT),
    _d("WRDADJ", "Word Information", "Adjective incidence per 1000 words", INC),
    _d("WRDADJc", "Word Information", "Adjective count", COUNT),
    _d("WRDADV", "Word Information", "Adverb incidence per 1000 words", INC),
    _d("WRDADVc", "Word Information", "Adverb count", COUNT),
    _d("WRDPRO", "Word Information", "Personal pronoun incidence per 1000 words", INC),
    _d("WRDPROc", "Word Information", "Personal pronoun count", COUNT),
    _d("WRDPRP1s", "Word Information", "First person singular pronoun incidence per 1000 words", INC),
    _d("WRDPRP1sc", "Word Information", "First person singular pronoun count", COUNT),
    _d("WRDPRP1p", "Word Information", "First person plural pronoun incidence per 1000 words", INC),
    _d("WRDPRP1pc", "Word Information", "First person plural pronoun count", COUNT),
    _d("WRDPRP2s", "Word Information", "Second person singular pronoun incidence per 1000 words", INC),
    _d("WRDPRP2sc", "Word Information", "Second person singular pronoun count", COUNT),
    _d("WRDPRP2p", "Word Information", "Second person plural pronoun incidence per 1000 words", INC),
    _d("WRDPRP2pc", "Word Information", "Second person plural pronoun count", COUNT),
    _d("WRDPRP3s", "Word Information", "Third person singular pronoun incidence per 1000 words", INC),
    _d("WRDPRP3sc", "Word Information", "Third person singular pronoun count", COUNT),
    _d("WRDPRP3p", "Word Information", "Third person plural pronoun incidence per 1000 words", INC),
    _d("WRDPRP3pc", "Word Information", "Third person plural pronoun count", COUNT),
]

_PSYCHO = [
    _d("PSYC", "Psycholinguistics", "Overall concreteness ratio", RATIO),
    _d("PSYC0", "Psycholinguistics", "Very low concreteness ratio (1-2.5)", RATIO),
    _d("PSYC1", "Psycholinguistics", "Low concreteness ratio (2.5-4)", RATIO),
    _d("PSYC2", "Psycholinguistics", "Medium concreteness ratio (4-5.5)", RATIO),
    _d("PSYC3", "Psycholinguistics", "High concreteness ratio (5.5-7)", RATIO),
    _d("PSYIM", "Psycholinguistics", "Overall imageability ratio", RATIO),
    _d("PSYIM0", "Psycholinguistics", "Very low imageability ratio (1-2.5)", RATIO),
    _d("PSYIM1", "Psycholinguistics", "Low imageability ratio (2.5-4)", RATIO),
    _d("PSYIM2", "Psycholinguistics", "Medium imageability ratio (4-5.5)", RATIO),
    _d("PSYIM3", "Psycholinguistics", "High imageability ratio (5.5-7)", RATIO),
    _d("PSYFM", "Psycholinguistics", "Overall familiarity ratio", RATIO),
    _d("PSYFM0", "Psycholinguistics", "Very low familiarity ratio (1-2.5)", RATIO),
    _d("PSYFM1", "Psycholinguistics", "Low familiarity ratio (2.5-4)", RATIO),
    _d("PSYFM2", "Psycholinguistics", "Medium familiarity ratio (4-5.5)", RATIO),
    _d("PSYFM3", "Psycholinguistics", "High familiarity ratio (5.5-7)", RATIO),
    _d("PSYAoA", "Psycholinguistics", "Overall age of acquisition ratio", RATIO),
    _d("PSYAoA0", "Psycholinguistics", "Very early acquisition ratio (1-2.5)", RATIO),
    _d("PSYAoA1", "Psycholinguistics", "Early acquisition ratio (2.5-4)", RATIO),
    _d("PSYAoA2", "Psycholinguistics", "Medium acquisition ratio (4-5.5)", RATIO),
    _d("PSYAoA3", "Psycholinguistics", "Late acquisition ratio (5.5-7)", RATIO),
    _d("PSYARO", "Psycholinguistics", "Overall arousal ratio", RATIO),
    _d("PSYARO0", "Psycholinguistics", "Very low arousal ratio (1-3)", RATIO),
    _d("PSYARO1", "Psycholinguistics", "Low arousal ratio (3-5)", RATIO),
    _d("PSYARO2", "Psycholinguistics", "Medium arousal ratio (5-7)", RATIO),
    _d("PSYARO3", "Psycholinguistics", "High arousal ratio (7-9)", RATIO),
    _d("PSYVAL", "Psycholinguistics", "Overall valence ratio", RATIO),
    _d("PSYVAL0", "Psycholinguistics", "Very negative valence ratio (1-3)", RATIO),
    _d("PSYVAL1", "Psycholinguistics", "Negative valence ratio (3-5)", RATIO),
    _d("PSYVAL2", "Psycholinguistics", "Positive valence ratio (5-7)", RATIO),
    _d("PSYVAL3", "Psycholinguistics", "Very positive valence ratio (7-9)", RATIO),
]

_SIMPLICITY = [
    _d("TSSRsh", "Textual Simplicity", "Ratio of short sentences (< 11 words)", RATIO),
    _d("TSSRmd", "Textual Simplicity", "Ratio of medium sentences (11-12 words)", RATIO),
    _d("TSSRlg", "Textual Simplicity", "Ratio of long sentences (13-14 words)", RATIO),
    _d("TSSRxl", "Textual Simplicity", "Ratio of very long sentences (>= 15 words)", RATIO),
]

REGISTRY: tuple[MetricDescriptor, ...] = tuple(
    _DESCRIPTIVE + _READABILITY + _REFERENTIAL + _DIVERSITY + _FREQUENCY
    + _SEMANTIC + _SYNTAX + _PATTERN + _CONNECTIVES + _WORDINFO + _PSYCHO
    + _SIMPLICITY
)

CODES: tuple[str, ...] = tuple(d.code for d in REGISTRY)
_BY_CODE = {d.code: d for d in REGISTRY}

CATEGORIES: tuple[str, ...] = tuple(dict.fromkeys(d.category for d in REGISTRY))

EXPECTED_CATEGORY_COUNTS = {
    "Descriptive": 27,
    "Referential Cohesion": 12,
    "Lexical Diversity": 22,
    "Readability": 7,
    "Connectives": 6,
    "Syntactic Complexity": 12,
    "Pattern Density": 14,
    "Semantic Cohesion": 8,
    "Word Information": 24,
    "Word Frequency": 16,
    "Textual Simplicity": 4,
    "Psycholinguistics": 30,
}

assert len(REGISTRY) == 182, f"registry holds {len(REGISTRY)} metrics"
assert len(_BY_CODE) == 182, "duplicate code in registry"


def list_metrics(category: str | None = None) -> list[MetricDescriptor]:
    """Descriptors in catalog order, optionally filtered to one category."""
    if category is None:
        return list(REGISTRY)
    if category not in CATEGORIES:
        raise UnknownCategory(f"unknown category {category!r}; known: {', '.join(CATEGORIES)}")
    return [d for d in REGISTRY if d.category == category]


def category_counts() -> dict[str, int]:
    counts: dict[str, int] = {c: 0 for c in CATEGORIES}
    for d in REGISTRY:
        counts[d.category] += 1
    return counts


def describe(code: str) -> MetricDescriptor:
    try:
        return _BY_CODE[code]
    except KeyError:
        raise UnknownMetric(code) from None


def registry_json() -> str:
    return json.dumps({
        "total": len(REGISTRY),
        "categories": category_counts(),
        "metrics": [asdict(d) for d in REGISTRY],
    }, ensure_ascii=False, indent=2)


def assemble(slices: Iterable[Mapping[str, float]]) -> dict[str, float]:
    """Merge per-module slices into one vector in registry order.

    Coverage is a hard guarantee: a code served twice raises
    DuplicateMetric, an unregistered code raises UnknownMetric, and any
    registered code left unserved raises MissingMetric.
    """
    merged: dict[str, float] = {}
    for piece in slices:
        for code, value in piece.items():
            if code not in _BY_CODE:
                raise UnknownMetric(code)
            if code in merged:
                raise DuplicateMetric(code)
            merged[code] = float(value)
    for code in CODES:
        if code not in merged:
            raise MissingMetric(code)
    return {code: merged[code] for code in CODES}


def group_by_category(vector: Mapping[str, float]) -> dict[str, dict[str, float]]:
    """Split a full metric vector into the per-category view."""
    grouped: dict[str, dict[str, float]] = {c: {} for c in CATEGORIES}
    for d in REGISTRY:
        grouped[d.category][d.code] = vector[d.code]
    return grouped
