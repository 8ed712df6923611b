"""Spanish syllable counting from orthography.

Counts vowel nuclei with diphthong/triphthong merging and hiatus
splitting. Accented weak vowels (í, ú) break diphthongs; word-final
"y" behaves as a vowel; the silent "u" of "qu" and "gue"/"gui" is
dropped before counting.
"""

import re

STRONG_VOWELS = set("aeoáéó")
WEAK_VOWELS = set("iuü")
ACCENTED_WEAK = set("íú")
VOWELS = STRONG_VOWELS | WEAK_VOWELS | ACCENTED_WEAK

_NON_LETTER = re.compile(r"[^a-záéíóúüñ]+")
_SILENT_U = re.compile(r"qu|gu(?=[eéií])")


def syllable_count(word: str) -> int:
    """Number of syllables in ``word``; 0 for input without letters.

    Total and deterministic: any string is accepted, letters are
    extracted and counted, and alphabetic input always yields >= 1.
    """
    w = word.casefold()
    if w.endswith("y"):
        w = w[:-1] + "i"
    w = _NON_LETTER.sub("", w)
    if not w:
        return 0
    w = _SILENT_U.sub(lambda m: m.group(0)[0], w)

    count = 0
    prev = ""
    for ch in w:
        if ch in VOWELS:
            if prev not in VOWELS:
                count += 1
            elif (ch in STRONG_VOWELS and prev in STRONG_VOWELS) or ch in ACCENTED_WEAK or prev in ACCENTED_WEAK:
                # hiatus: strong+strong, or an accented weak vowel on either side
                count += 1
        prev = ch
    return max(count, 1)
