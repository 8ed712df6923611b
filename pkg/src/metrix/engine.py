"""Document-to-metric-vector engine.

One Engine holds the loaded lexicons, the embedding provider, and the
thresholds; ``compute`` runs every metric module over a Document and
assembles the full 182-value vector through the registry. Engines are
read-only after construction and safe to share across threads; the
VOCd seed is derived from the run seed plus a content hash, so a
document's vector never depends on its position in a batch.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import cohesion, diversity, psycho, readability, surface, syntax
from .config import MetricParams
from .doc import AnnotatorContract, Document, annotate
from .errors import NotEnoughTokens
from .lexicons import LexiconBundle, load_bundle
from .registry import assemble, group_by_category

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class DocumentResult:
    source_id: str
    metrics: dict[str, float]
    coverage: float                      # norm coverage over content words
    warnings: tuple[str, ...] = ()

    def grouped(self) -> dict[str, dict[str, float]]:
        return group_by_category(self.metrics)


class Engine:
    def __init__(self, lexicons: LexiconBundle | None = None,
                 provider: cohesion.EmbeddingProvider | None = None,
                 params: MetricParams = MetricParams(), seed: int = 42):
        self.lexicons = lexicons if lexicons is not None else load_bundle()
        self.params = params
        self.provider = provider if provider is not None else cohesion.HashedTfEmbedding(params.embedding_dim)
        self.seed = seed & _SEED_MASK

    def _vocd_seed(self, items: list[str]) -> int:
        digest = hashlib.blake2b("\x1f".join(items).encode("utf-8"),
                                 digest_size=8).digest()
        return (self.seed << 64) | int.from_bytes(digest, "little")

    def compute(self, doc: Document) -> DocumentResult:
        params = self.params
        warnings: list[str] = []

        items = [t.folded for t in doc.words()]
        div = diversity.ttr_family(doc)
        div["LDMLTD"] = diversity.mtld(items, params.mtld_ttr_threshold)
        if len(items) < diversity.MTLD_MIN_TOKENS:
            warnings.append("mtld-degenerate-input")
        try:
            div["LDVOCd"] = diversity.vocd(items, self._vocd_seed(items))
        except NotEnoughTokens:
            div["LDVOCd"] = 0.0
            warnings.append("vocd-not-enough-tokens")
        div["LDMaas"] = diversity.maas(items)

        psy, coverage = psycho.psycholinguistic_ratios(
            doc, self.lexicons.norms,
            bins7=params.psycho_bins_scale7, bins9=params.psycho_bins_scale9)
        if coverage == 0.0:
            warnings.append("norms-zero-coverage")

        metrics = assemble([
            surface.descriptive(doc),
            surface.word_information(doc),
            surface.textual_simplicity(doc),
            div,
            readability.readability_indices(doc),
            syntax.syntactic_complexity(doc),
            syntax.pattern_density(doc, self.lexicons.negations),
            cohesion.referential_cohesion(doc),
            cohesion.semantic_cohesion(doc, self.provider),
            psy,
            psycho.word_frequency_metrics(doc, self.lexicons.frequencies,
                                          params.rare_zipf_threshold),
            psycho.connective_incidence(doc, self.lexicons.connectives),
        ])
        return DocumentResult(source_id=doc.source_id, metrics=metrics,
                              coverage=coverage, warnings=tuple(warnings))

    def compute_text(self, raw: str, annotator: AnnotatorContract,
                     source_id: str = "") -> DocumentResult:
        doc = annotate(raw, annotator, source_id=source_id,
                       stopwords=self.lexicons.stopwords)
        return self.compute(doc)
