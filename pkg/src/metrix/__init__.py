"""Linguistic metric extraction engine for Spanish documents.

182 metrics across 12 categories, computed from dependency-annotated
input (CoNLL-U) or raw text through a pluggable annotator contract.
"""

from .config import MetricParams
from .doc import Document, Sentence, Token, annotate, ingest_conllu, to_conllu
from .engine import DocumentResult, Engine
from .lexicons import LexiconBundle, load_bundle
from .ranking import RankedFeature, rank_features
from .registry import CATEGORIES, CODES, REGISTRY, list_metrics

__version__ = "0.1.0"

__all__ = [
    "CATEGORIES", "CODES", "REGISTRY", "Document", "DocumentResult",
    "Engine", "LexiconBundle", "MetricParams", "RankedFeature", "Sentence",
    "Token", "annotate", "ingest_conllu", "list_metrics", "load_bundle",
    "rank_features", "to_conllu", "__version__",
]
