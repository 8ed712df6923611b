import pytest
from hypothesis import given
from hypothesis import strategies as st

from metrix.syllables import VOWELS, syllable_count


@pytest.mark.parametrize("word,expected", [
    ("mi", 1),
    ("es", 1),
    ("este", 2),
    ("ejemplo", 3),        # e-jem-plo
    ("país", 2),           # accented í breaks the diphthong: pa-ís
    ("día", 2),
    ("creía", 3),          # cre-í-a
    ("leo", 2),            # strong+strong hiatus
    ("hoy", 1),            # final y as vowel
    ("buey", 1),           # triphthong
    ("muy", 1),
    ("reyes", 2),          # intervocalic y is a consonant
    ("queso", 2),          # silent u
    ("quien", 1),
    ("guerra", 2),
    ("guía", 2),           # silent u, then hiatus gu-í-a
    ("pingüino", 3),       # ü is pronounced
    ("ahora", 3),
    ("limpiáis", 2),
    ("caminar", 3),
    ("y", 1),
    ("pst", 1),            # letters but no vowel
    ("123", 0),
    ("...", 0),
    ("", 0),
])
def test_examples(word, expected):
    assert syllable_count(word) == expected


def test_case_insensitive():
    assert syllable_count("Ejemplo") == syllable_count("ejemplo") == 3


@given(st.text(max_size=30))
def test_total_and_deterministic(s):
    first = syllable_count(s)
    assert first == syllable_count(s)
    assert first >= 0


@given(st.text(alphabet="bcdfgamñáéíóúüelio", min_size=1, max_size=20))
def test_at_least_one_syllable_with_vowel(s):
    if any(c in VOWELS for c in s.casefold()):
        assert syllable_count(s) >= 1
