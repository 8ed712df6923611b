"""Annotator implementations for the raw-text pathway.

The contract is text in, CoNLL-U bytes out, which lets out-of-process
taggers plug in over stdin/stdout. BasicAnnotator is a deterministic
rule-based approximation (closed-class lookup plus suffix heuristics),
not a statistical tagger: good enough for surface statistics and smoke
runs, while serious work should feed pre-annotated CoNLL-U or an
external annotator command.
"""

from __future__ import annotations

import re
import subprocess

from .errors import AnnotatorFailure

_TOKEN = re.compile(r"\w+|[^\w\s]", re.UNICODE)
_SENT_SPLIT = re.compile(r"(?<=[.!?…])\s+")

_DETERMINERS = {
    "el", "la", "los", "las", "un", "una", "unos", "unas", "este", "esta",
    "estos", "estas", "ese", "esa", "esos", "esas", "aquel", "aquella",
    "aquellos", "aquellas", "mi", "mis", "tu", "tus", "su", "sus", "nuestro",
    "nuestra", "nuestros", "nuestras", "vuestro", "vuestra", "cada", "otro",
    "otra", "otros", "otras", "mucho", "mucha", "muchos", "muchas", "poco",
    "poca", "pocos", "pocas", "todo", "toda", "todos", "todas", "ningún",
    "ninguna", "alguna", "algunos", "algunas", "varios", "varias",
}
_PREPOSITIONS = {
    "a", "ante", "bajo", "con", "contra", "de", "desde", "durante", "en",
    "entre", "hacia", "hasta", "mediante", "para", "por", "según", "sin",
    "sobre", "tras", "del", "al",
}
_CCONJ = {"y", "e", "o", "u", "ni", "pero", "sino", "mas"}
_SCONJ = {"que", "si", "porque", "aunque", "cuando", "mientras", "como", "pues"}
_PERSONAL_PRONOUNS = {
    # surface: (Person, Number)
    "yo": ("1", "Sing"), "me": ("1", "Sing"), "mí": ("1", "Sing"),
    "tú": ("2", "Sing"), "te": ("2", "Sing"), "ti": ("2", "Sing"),
    "él": ("3", "Sing"), "ella": ("3", "Sing"), "ello": ("3", "Sing"),
    "usted": ("3", "Sing"), "se": ("3", "Sing"), "le": ("3", "Sing"),
    "nosotros": ("1", "Plur"), "nosotras": ("1", "Plur"), "nos": ("1", "Plur"),
    "vosotros": ("2", "Plur"), "vosotras": ("2", "Plur"), "os": ("2", "Plur"),
    "ellos": ("3", "Plur"), "ellas": ("3", "Plur"), "ustedes": ("3", "Plur"),
    "les": ("3", "Plur"),
}
_DEM_PRONOUNS = {"esto", "eso", "aquello"}
_AUX_LEMMAS = {
    "es": "ser", "son": "ser", "era": "ser", "eran": "ser", "fue": "ser",
    "fueron": "ser", "será": "ser", "serán": "ser", "ser": "ser",
    "soy": "ser", "somos": "ser", "eres": "ser",
    "está": "estar", "están": "estar", "estaba": "estar", "estaban": "estar",
    "estuvo": "estar", "estar": "estar", "estoy": "estar", "estamos": "estar",
    "ha": "haber", "han": "haber", "había": "haber", "habían": "haber",
    "hay": "haber", "he": "haber", "hemos": "haber", "haber": "haber",
}
_ADVERBS = {
    "no", "sí", "muy", "más", "menos", "bien", "mal", "ya", "aquí", "ahí",
    "allí", "allá", "hoy", "ayer", "mañana", "siempre", "nunca", "jamás",
    "también", "tampoco", "casi", "quizás", "quizá", "además", "entonces",
    "luego", "después", "antes", "ahora", "todavía", "aún", "pronto",
    "tarde", "cerca", "lejos", "despacio", "deprisa", "así",
}

_VERB_FINITE_ENDINGS = (
    "amos", "emos", "imos", "áis", "éis", "aba", "aban", "abas", "ía",
    "ían", "ías", "aron", "ieron", "ará", "arán", "erá", "erán", "irá",
    "irán", "aría", "arían", "ó", "ió",
)
_NOUN_ENDINGS = ("ción", "sión", "dad", "tad", "eza", "miento", "ura", "aje", "ncia")
_ADJ_ENDINGS = ("oso", "osa", "osos", "osas", "ivo", "iva", "ivos", "ivas",
                "able", "ables", "ible", "ibles", "al", "ales")


class CommandAnnotator:
    """Run an external tagger: raw text on stdin, CoNLL-U on stdout."""

    def __init__(self, argv: list[str], timeout: float = 300.0):
        if not argv:
            raise ValueError("empty annotator command")
        self.argv = argv
        self.timeout = timeout

    def annotate(self, text: str) -> bytes:
        try:
            proc = subprocess.run(self.argv, input=text.encode("utf-8"),
                                  capture_output=True, timeout=self.timeout)
        except OSError as exc:
            raise AnnotatorFailure(f"cannot run {self.argv[0]!r}: {exc}") from exc
        except subprocess.TimeoutExpired as exc:
            raise AnnotatorFailure(f"annotator timed out after {self.timeout}s") from exc
        if proc.returncode != 0:
            detail = proc.stderr.decode("utf-8", "replace").strip()
            raise AnnotatorFailure(f"annotator exited {proc.returncode}: {detail[:500]}")
        return proc.stdout


class BasicAnnotator:
    """Deterministic rule-based Spanish annotation (see module docstring)."""

    name = "basic-rules"

    def annotate(self, text: str) -> bytes:
        out = []
        for sent in _SENT_SPLIT.split(text.strip()):
            if not sent.strip():
                continue
            rows = self._tag_sentence(_TOKEN.findall(sent))
            if rows:
                out.append("\n".join(rows))
        return ("\n\n".join(out) + "\n").encode("utf-8")

    def _tag_sentence(self, surfaces: list[str]) -> list[str]:
        tagged = [self._tag(sf, first=i == 0) for i, sf in enumerate(surfaces)]
        heads = self._attach(tagged)
        rows = []
        for i, ((upos, lemma, morph), (head, deprel)) in enumerate(zip(tagged, heads), start=1):
            feats = "|".join(f"{k}={v}" for k, v in sorted(morph.items())) or "_"
            rows.append(f"{i}\t{surfaces[i-1]}\t{lemma}\t{upos}\t_\t{feats}\t{head}\t{deprel}\t_\t_")
        return rows

    def _tag(self, surface: str, first: bool) -> tuple[str, str, dict]:
        low = surface.casefold()
        if not any(c.isalnum() for c in surface):
            return "PUNCT", surface, {}
        if low.isdigit():
            return "NUM", low, {}
        if low in _DETERMINERS:
            return "DET", low, {}
        if low in _PERSONAL_PRONOUNS:
            person, number = _PERSONAL_PRONOUNS[low]
            return "PRON", low, {"Person": person, "Number": number, "PronType": "Prs"}
        if low in _DEM_PRONOUNS:
            return "PRON", low, {"PronType": "Dem"}
        if low in _AUX_LEMMAS:
            return "AUX", _AUX_LEMMAS[low], {"VerbForm": "Fin"}
        if low in _PREPOSITIONS:
            return "ADP", low, {}
        if low in _CCONJ:
            return "CCONJ", low, {}
        if low in _SCONJ:
            return "SCONJ", low, {}
        if low in _ADVERBS or low.endswith("mente"):
            return "ADV", low, {}
        if not first and surface[:1].isupper():
            return "PROPN", low, {}
        if low.endswith(("ando", "iendo", "yendo")):
            return "VERB", self._verb_lemma(low), {"VerbForm": "Ger"}
        if low.endswith(("ar", "er", "ir")) and len(low) > 3:
            return "VERB", low, {"VerbForm": "Inf"}
        if low.endswith(("ado", "ido", "ados", "idos")):
            return "VERB", self._verb_lemma(low), {"VerbForm": "Part"}
        if low.endswith(_VERB_FINITE_ENDINGS):
            return "VERB", self._verb_lemma(low), {"VerbForm": "Fin"}
        for ending in _ADJ_ENDINGS:
            if low.endswith(ending) and len(low) > len(ending) + 1:
                return "ADJ", self._singular(low), {}
        for ending in _NOUN_ENDINGS:
            if low.endswith(ending) or low.endswith(ending + "s") or low.endswith(ending + "es"):
                return "NOUN", self._singular(low), {}
        return "NOUN", self._singular(low), {}

    @staticmethod
    def _verb_lemma(low: str) -> str:
        for ending, repl in (("ando", "ar"), ("iendo", "er"), ("yendo", "er"),
                             ("ados", "ar"), ("idos", "er"), ("ado", "ar"),
                             ("ido", "er"), ("aron", "ar"), ("ieron", "er"),
                             ("aba", "ar"), ("ía", "er"), ("ó", "ar"), ("ió", "er")):
            if low.endswith(ending):
                return low[: -len(ending)] + repl
        return low

    @staticmethod
    def _singular(low: str) -> str:
        if len(low) > 4 and low.endswith("s") and low[-2] in "aeiou":
            return low[:-1]
        return low

    @staticmethod
    def _attach(tagged: list[tuple[str, str, dict]]) -> list[tuple[int, str]]:
        upos = [t[0] for t in tagged]
        n = len(upos)
        root = next((i for i, u in enumerate(upos) if u == "VERB"),
                    next((i for i, u in enumerate(upos) if u == "AUX"), 0))
        heads: list[tuple[int, str]] = []
        for i, u in enumerate(upos):
            if i == root:
                heads.append((0, "root"))
            elif u == "PUNCT":
                heads.append((root + 1, "punct"))
            elif u == "DET":
                nxt = next((j for j in range(i + 1, n) if upos[j] in ("NOUN", "PROPN")), None)
                heads.append((nxt + 1, "det") if nxt is not None else (root + 1, "dep"))
            elif u == "ADJ":
                prv = next((j for j in range(i - 1, -1, -1) if upos[j] in ("NOUN", "PROPN")), None)
                heads.append((prv + 1, "amod") if prv is not None else (root + 1, "dep"))
            elif u == "ADP":
                nxt = next((j for j in range(i + 1, n) if upos[j] in ("NOUN", "PROPN")), None)
                heads.append((nxt + 1, "case") if nxt is not None else (root + 1, "dep"))
            elif u in ("NOUN", "PROPN", "PRON") and i < root:
                heads.append((root + 1, "nsubj"))
            elif u in ("NOUN", "PROPN") and i > root:
                heads.append((root + 1, "obj"))
            elif u == "ADV":
                heads.append((root + 1, "advmod"))
            elif u == "SCONJ":
                heads.append((root + 1, "mark"))
            elif u == "CCONJ":
                heads.append((root + 1, "cc"))
            else:
                heads.append((root + 1, "dep"))
        return heads
