"""Immutable lexical resources: norms, frequencies, connectives, negations, stopwords.

All lexicons are line-oriented UTF-8 data files. The packaged ``data/``
directory ships small openly-licensed seed lexicons; point the loader at
your own directory (or set METRIX_DATA_DIR) to use full resources such
as a complete psycholinguistic norms table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import LexiconFormatError

NORM_COLUMNS = ("concreteness", "imageability", "familiarity",
                "age_of_acquisition", "valence", "arousal")
NORM_RANGES = {
    "concreteness": (1.0, 7.0),
    "imageability": (1.0, 7.0),
    "familiarity": (1.0, 7.0),
    "age_of_acquisition": (1.0, 7.0),
    "valence": (1.0, 9.0),
    "arousal": (1.0, 9.0),
}
CONNECTIVE_CATEGORIES = ("causal", "logical", "adversative", "temporal", "additive")

Phrase = tuple[str, ...]


@dataclass(frozen=True, slots=True)
class NormEntry:
    concreteness: float | None = None
    imageability: float | None = None
    familiarity: float | None = None
    age_of_acquisition: float | None = None
    valence: float | None = None
    arousal: float | None = None

    def get(self, dimension: str) -> float | None:
        return getattr(self, dimension)


@dataclass(frozen=True)
class NormsTable:
    entries: dict[str, NormEntry]
    duplicate_rows: int = 0

    def lookup(self, *keys: str) -> NormEntry | None:
        """First hit among case-folded keys (lemma first, surface fallback)."""
        for key in keys:
            entry = self.entries.get(key.casefold())
            if entry is not None:
                return entry
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, NormsTable) and self.entries == other.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ConnectiveSets:
    causal: frozenset[Phrase]
    logical: frozenset[Phrase]
    adversative: frozenset[Phrase]
    temporal: frozenset[Phrase]
    additive: frozenset[Phrase]

    def by_category(self) -> dict[str, frozenset[Phrase]]:
        return {c: getattr(self, c) for c in CONNECTIVE_CATEGORIES}


class FrequencyTable:
    """Case-folded word -> Zipf value in [0, 8]."""

    def __init__(self, values: dict[str, float]):
        self._values = values

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        return isinstance(other, FrequencyTable) and self._values == other._values

    def get(self, word: str) -> float:
        return self._values.get(word.casefold(), 0.0)


def zipf(word: str, table: FrequencyTable) -> float:
    """Zipf frequency of ``word``; 0.0 out of vocabulary (maximally rare)."""
    return table.get(word)


# ---------------------------------------------------------------------------
# loaders

def load_norms(path: str | Path) -> NormsTable:
    """Load a TSV norms table: header row, word column + six norm columns.

    Empty cells mark missing dimensions; duplicate words keep the last
    row and bump ``duplicate_rows``. Non-numeric or out-of-range cells
    raise LexiconFormatError with the offending line number.
    """
    entries: dict[str, NormEntry] = {}
    duplicates = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if line_no == 1 or not line.strip():
                continue
            cells = line.rstrip("\n").split("\t")
            if len(cells) != 1 + len(NORM_COLUMNS):
                raise LexiconFormatError(line_no, f"expected {1 + len(NORM_COLUMNS)} columns")
            word = cells[0].casefold()
            values: dict[str, float | None] = {}
            for name, cell in zip(NORM_COLUMNS, cells[1:]):
                cell = cell.strip()
                if not cell:
                    values[name] = None
                    continue
                try:
                    value = float(cell)
                except ValueError as exc:
                    raise LexiconFormatError(line_no, f"non-numeric {name} cell {cell!r}") from exc
                lo, hi = NORM_RANGES[name]
                if not (lo <= value <= hi):
                    raise LexiconFormatError(line_no, f"{name} value {value} outside [{lo}, {hi}]")
                values[name] = value
            if word in entries:
                duplicates += 1
            entries[word] = NormEntry(**values)
    return NormsTable(entries=entries, duplicate_rows=duplicates)


def load_frequencies(path: str | Path) -> FrequencyTable:
    values: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if line_no == 1 or not line.strip():
                continue
            cells = line.rstrip("\n").split("\t")
            if len(cells) != 2:
                raise LexiconFormatError(line_no, "expected 2 columns")
            try:
                value = float(cells[1])
            except ValueError as exc:
                raise LexiconFormatError(line_no, f"non-numeric Zipf cell {cells[1]!r}") from exc
            if not (0.0 <= value <= 8.0):
                raise LexiconFormatError(line_no, f"Zipf value {value} outside [0, 8]")
            values[cells[0].casefold()] = value
    return FrequencyTable(values)


def _parse_phrase(text: str, line_no: int) -> Phrase:
    words = tuple(text.casefold().split())
    if not 1 <= len(words) <= 4:
        raise LexiconFormatError(line_no, f"phrase {text!r} must have 1-4 words")
    return words


def load_connectives(path: str | Path) -> ConnectiveSets:
    """INI-like file: ``[category]`` section headers, one phrase per line."""
    sections: dict[str, set[Phrase]] = {c: set() for c in CONNECTIVE_CATEGORIES}
    section: str | None = None
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if text.startswith("[") and text.endswith("]"):
                section = text[1:-1].strip().casefold()
                if section not in sections:
                    raise LexiconFormatError(line_no, f"unknown category {section!r}")
                continue
            if section is None:
                raise LexiconFormatError(line_no, "phrase before any [category] header")
            sections[section].add(_parse_phrase(text, line_no))
    return ConnectiveSets(**{c: frozenset(v) for c, v in sections.items()})


def load_phrases(path: str | Path) -> frozenset[Phrase]:
    """Line-per-phrase file (negation expression list)."""
    phrases: set[Phrase] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if text and not text.startswith("#"):
                phrases.add(_parse_phrase(text, line_no))
    return frozenset(phrases)


def load_stopwords(path: str | Path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(
            line.strip().casefold() for line in fh
            if line.strip() and not line.startswith("#")
        )


# ---------------------------------------------------------------------------
# phrase matching

def match_phrases(surfaces: Sequence[str], phrases: frozenset[Phrase]) -> int:
    """Count non-overlapping matches, longest-first, over folded surfaces."""
    if not phrases:
        return 0
    max_len = max(len(p) for p in phrases)
    count = 0
    i = 0
    n = len(surfaces)
    while i < n:
        matched = 0
        for length in range(min(max_len, n - i), 0, -1):
            if tuple(surfaces[i:i + length]) in phrases:
                matched = length
                break
        if matched:
            count += 1
            i += matched
        else:
            i += 1
    return count


def match_connectives(sentence, sets: ConnectiveSets) -> dict[str, int]:
    """Per-category connective counts for one sentence.

    Categories are matched independently, so a phrase listed under two
    categories counts in both.
    """
    surfaces = [t.folded for t in sentence.tokens]
    return {cat: match_phrases(surfaces, phrases)
            for cat, phrases in sets.by_category().items()}


# ---------------------------------------------------------------------------
# bundle

@dataclass(frozen=True)
class LexiconBundle:
    norms: NormsTable
    frequencies: FrequencyTable
    connectives: ConnectiveSets
    negations: frozenset[Phrase]
    stopwords: frozenset[str]


def packaged_data_dir() -> Path:
    return Path(__file__).parent / "data"


def resolve_data_dir(explicit: str | Path | None = None) -> Path:
    """Lexicon directory: explicit arg > METRIX_DATA_DIR > packaged seed."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get("METRIX_DATA_DIR")
    if env:
        return Path(env)
    return packaged_data_dir()


def load_bundle(directory: str | Path | None = None) -> LexiconBundle:
    base = resolve_data_dir(directory)
    return LexiconBundle(
        norms=load_norms(base / "norms.tsv"),
        frequencies=load_frequencies(base / "frequencies.tsv"),
        connectives=load_connectives(base / "connectives.txt"),
        negations=load_phrases(base / "negations.txt"),
        stopwords=load_stopwords(base / "stopwords.txt"),
    )
