"""Spanish Snowball stemming algorithm.

Self-contained implementation of the standard algorithm: attached
pronoun stripping, standard suffix removal gated on the R1/R2 regions,
verb suffix removal gated on RV, residual suffixes, and final
de-accenting. Regions are fixed positions computed on the input word;
suffix conditions test against them as the word shrinks from the end.
"""

from functools import lru_cache

_VOWELS = set("aeiouáéíóúü")

_PRONOUNS = ("selas", "selos", "sela", "selo", "las", "les", "los", "nos",
             "me", "se", "la", "le", "lo")
_PRON_ACCENTED = {"iéndo": "iendo", "ándo": "ando", "ár": "ar", "ér": "er", "ír": "ir"}
_PRON_PLAIN = ("iendo", "ando", "ar", "er", "ir")

_STEP1_DELETE_R2 = (
    "amientos", "imientos", "amiento", "imiento", "anzas", "ismos", "ables",
    "ibles", "istas", "anza", "icos", "icas", "ismo", "able", "ible", "ista",
    "osos", "osas", "ico", "ica", "oso", "osa",
)
_STEP1_ADOR = ("aciones", "adoras", "adores", "ancias", "adora", "ación",
               "antes", "ancia", "ador", "ante")
_STEP2A = ("yeron", "yendo", "yamos", "yais", "yan", "yen", "yas", "yes",
           "ya", "ye", "yo", "yó")
_STEP2B_GU = ("emos", "éis", "en", "es")
_STEP2B = (
    "aríamos", "eríamos", "iríamos", "iéramos", "iésemos", "aríais",
    "aremos", "eríais", "eremos", "iríais", "iremos", "ierais", "ieseis",
    "asteis", "isteis", "ábamos", "áramos", "ásemos", "arían", "arías",
    "aréis", "erían", "erías", "eréis", "irían", "irías", "iréis", "ieran",
    "iesen", "ieron", "iendo", "ieras", "ieses", "abais", "arais", "aseis",
    "íamos", "arán", "arás", "aría", "erán", "erás", "ería", "irán", "irás",
    "iría", "iera", "iese", "aste", "iste", "aban", "aran", "asen", "aron",
    "ando", "abas", "adas", "idas", "aras", "ases", "íais", "ados", "idos",
    "amos", "imos", "ará", "aré", "erá", "eré", "irá", "iré", "aba", "ada",
    "ida", "ara", "ase", "ían", "ado", "ido", "ías", "áis", "ía", "ad",
    "ed", "id", "an", "ió", "ar", "er", "ir", "as", "ís",
)
_STEP3_SIMPLE = ("os", "a", "o", "á", "í", "ó")
_DEACCENT = str.maketrans("áéíóú", "aeiou")


def _regions(word: str) -> tuple[int, int, int]:
    n = len(word)

    def after_first_nonvowel_after_vowel(start: int) -> int:
        i = start
        while i < n and word[i] not in _VOWELS:
            i += 1
        while i < n and word[i] in _VOWELS:
            i += 1
        return min(i + 1, n) if i < n else n

    r1 = after_first_nonvowel_after_vowel(0)
    r2 = after_first_nonvowel_after_vowel(r1)

    if n < 3:
        rv = n
    elif word[1] not in _VOWELS:
        i = 2
        while i < n and word[i] not in _VOWELS:
            i += 1
        rv = min(i + 1, n) if i < n else n
    elif word[0] in _VOWELS and word[1] in _VOWELS:
        i = 2
        while i < n and word[i] in _VOWELS:
            i += 1
        rv = min(i + 1, n) if i < n else n
    else:
        rv = 3
    return r1, r2, rv


def _longest(word: str, suffixes: tuple[str, ...]) -> str | None:
    best = None
    for s in suffixes:
        if word.endswith(s) and (best is None or len(s) > len(best)):
            best = s
    return best


def _in(word: str, suffix_len: int, region: int) -> bool:
    return len(word) - suffix_len >= region


def _step0(word: str, rv: int) -> str:
    pron = _longest(word, _PRONOUNS)
    if pron is None:
        return word
    stem = word[: len(word) - len(pron)]
    acc = _longest(stem, tuple(_PRON_ACCENTED))
    if acc is not None and len(stem) - len(acc) >= rv:
        return stem[: len(stem) - len(acc)] + _PRON_ACCENTED[acc]
    plain = _longest(stem, _PRON_PLAIN)
    if plain is not None and len(stem) - len(plain) >= rv:
        return stem
    if stem.endswith("yendo") and len(stem) - 5 >= rv and stem[-6:-5] == "u":
        return stem
    return word


def _step1(word: str, r1: int, r2: int) -> tuple[str, bool]:
    """Longest-match-then-test: a failed region check removes nothing."""
    groups = (_STEP1_DELETE_R2 + _STEP1_ADOR
              + ("logías", "logía", "uciones", "ución", "encias", "encia",
                 "amente", "mente", "idades", "idad", "ivas", "ivos", "iva", "ivo"))
    suffix = _longest(word, groups)
    if suffix is None:
        return word, False

    def drop(w: str, k: int) -> str:
        return w[: len(w) - k]

    if suffix in _STEP1_DELETE_R2:
        if _in(word, len(suffix), r2):
            return drop(word, len(suffix)), True
        return word, False
    if suffix in _STEP1_ADOR:
        if not _in(word, len(suffix), r2):
            return word, False
        word = drop(word, len(suffix))
        if word.endswith("ic") and _in(word, 2, r2):
            word = drop(word, 2)
        return word, True
    if suffix in ("logía", "logías"):
        if _in(word, len(suffix), r2):
            return drop(word, len(suffix)) + "log", True
        return word, False
    if suffix in ("ución", "uciones"):
        if _in(word, len(suffix), r2):
            return drop(word, len(suffix)) + "u", True
        return word, False
    if suffix in ("encia", "encias"):
        if _in(word, len(suffix), r2):
            return drop(word, len(suffix)) + "ente", True
        return word, False
    if suffix == "amente":
        if not _in(word, len(suffix), r1):
            return word, False
        word = drop(word, len(suffix))
        if word.endswith("iv") and _in(word, 2, r2):
            word = drop(word, 2)
            if word.endswith("at") and _in(word, 2, r2):
                word = drop(word, 2)
        elif any(word.endswith(p) and _in(word, 2, r2) for p in ("os", "ic", "ad")):
            word = drop(word, 2)
        return word, True
    if suffix == "mente":
        if not _in(word, len(suffix), r2):
            return word, False
        word = drop(word, len(suffix))
        for p in ("ante", "able", "ible"):
            if word.endswith(p) and _in(word, len(p), r2):
                return drop(word, len(p)), True
        return word, True
    if suffix in ("idad", "idades"):
        if not _in(word, len(suffix), r2):
            return word, False
        word = drop(word, len(suffix))
        for p in ("abil", "ic", "iv"):
            if word.endswith(p) and _in(word, len(p), r2):
                return drop(word, len(p)), True
        return word, True
    # iva ivo ivas ivos
    if _in(word, len(suffix), r2):
        word = drop(word, len(suffix))
        if word.endswith("at") and _in(word, 2, r2):
            word = drop(word, 2)
        return word, True
    return word, False


def _step2a(word: str, rv: int) -> tuple[str, bool]:
    suffix = _longest(word, _STEP2A)
    if suffix is None or not _in(word, len(suffix), rv):
        return word, False
    stem = word[: len(word) - len(suffix)]
    if stem.endswith("u"):
        return stem, True
    return word, False


def _step2b(word: str, rv: int) -> str:
    suffix = _longest(word, _STEP2B_GU + _STEP2B)
    if suffix is None or not _in(word, len(suffix), rv):
        return word
    word = word[: len(word) - len(suffix)]
    if suffix in _STEP2B_GU and word.endswith("gu"):
        word = word[:-1]
    return word


def _step3(word: str, rv: int) -> str:
    suffix = _longest(word, _STEP3_SIMPLE + ("e", "é"))
    if suffix is None or not _in(word, len(suffix), rv):
        return word
    word = word[: len(word) - len(suffix)]
    if suffix in ("e", "é") and word.endswith("gu") and len(word) - 1 >= rv:
        word = word[:-1]
    return word


@lru_cache(maxsize=65536)
def stem(word: str) -> str:
    """Stem one word; input is case-folded, output carries no acute accents."""
    w = word.casefold()
    if len(w) < 2 or not all(c.isalpha() for c in w):
        # keep non-alphabetic tokens untouched apart from de-accenting
        return w.translate(_DEACCENT)
    r1, r2, rv = _regions(w)
    w = _step0(w, rv)
    w, removed = _step1(w, r1, r2)
    if not removed:
        w, removed = _step2a(w, rv)
        if not removed:
            w = _step2b(w, rv)
    w = _step3(w, rv)
    return w.translate(_DEACCENT)
