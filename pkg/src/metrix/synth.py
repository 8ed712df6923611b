"""Deterministic synthetic Spanish corpus builder.

Produces dependency-annotated CoNLL-U from a closed vocabulary and a
handful of sentence templates. Used by the benchmark scripts and the
test suite; the output is grammatically plausible rather than fluent,
which is all the metric math needs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

# ---------------------------------------------------------------------------
# closed vocabulary

NOUNS = {
    # lemma: gender ("Masc"/"Fem")
    "perro": "Masc", "gato": "Masc", "casa": "Fem", "libro": "Masc",
    "niño": "Masc", "niña": "Fem", "mujer": "Fem", "hombre": "Masc",
    "ciudad": "Fem", "coche": "Masc", "árbol": "Masc", "flor": "Fem",
    "sol": "Masc", "luna": "Fem", "mar": "Masc", "montaña": "Fem",
    "río": "Masc", "mesa": "Fem", "silla": "Fem", "puerta": "Fem",
    "ventana": "Fem", "camino": "Masc", "tiempo": "Masc", "día": "Masc",
    "noche": "Fem", "año": "Masc", "idea": "Fem", "historia": "Fem",
    "palabra": "Fem", "trabajo": "Masc", "escuela": "Fem", "maestro": "Masc",
    "amigo": "Masc", "familia": "Fem", "comida": "Fem", "agua": "Fem",
    "fuego": "Masc", "viento": "Masc", "luz": "Fem", "sombra": "Fem",
    "música": "Fem", "juego": "Masc", "parque": "Masc", "jardín": "Masc",
    "pueblo": "Masc", "mundo": "Masc", "cielo": "Masc", "estrella": "Fem",
    "tren": "Masc", "carta": "Fem", "madre": "Fem", "padre": "Masc",
    "mano": "Fem", "corazón": "Masc", "amor": "Masc", "miedo": "Masc",
    "vida": "Fem", "paz": "Fem",
    # designated low-frequency nouns so rare-word metrics have signal
    "senda": "Fem", "ocaso": "Masc", "bruma": "Fem", "penumbra": "Fem",
    "vereda": "Fem", "arroyo": "Masc",
}

ABSTRACT_NOUNS = {"idea", "tiempo", "historia", "palabra", "trabajo", "amor",
                  "miedo", "vida", "paz", "música", "juego"}

VERBS_AR = ["saltar", "cantar", "bailar", "caminar", "mirar", "escuchar",
            "hablar", "trabajar", "estudiar", "viajar", "llegar", "comprar",
            "tomar", "ganar", "llamar", "esperar", "ayudar", "usar",
            "pintar", "lavar"]
VERBS_ER = ["comer", "beber", "correr", "aprender", "vender", "responder",
            "comprender"]
VERBS_IR = ["vivir", "escribir", "subir", "abrir", "recibir", "decidir",
            "partir"]
VERBS = VERBS_AR + VERBS_ER + VERBS_IR

ADJS_O = ["pequeño", "alto", "bajo", "nuevo", "viejo", "bueno", "malo",
          "rápido", "lento", "claro", "oscuro", "frío", "bonito", "feo",
          "rojo", "blanco", "negro", "antiguo", "famoso", "tranquilo"]
ADJS_INV = ["grande", "feliz", "triste", "fuerte", "débil", "azul", "verde",
            "joven", "difícil", "caliente"]
ADJS = ADJS_O + ADJS_INV

ADVS = ["siempre", "hoy", "ayer", "aquí", "allí", "bien", "mal", "despacio",
        "deprisa", "cerca", "lejos", "pronto", "tarde", "ahora", "todavía"]

PREPS = ["de", "en", "con", "por", "para", "sobre", "desde", "hasta"]

PRONOUNS = {
    # surface: (Person, Number)
    "yo": ("1", "Sing"), "tú": ("2", "Sing"), "él": ("3", "Sing"),
    "ella": ("3", "Sing"), "nosotros": ("1", "Plur"), "vosotros": ("2", "Plur"),
    "ellos": ("3", "Plur"), "ellas": ("3", "Plur"),
}


def verb_forms(lemma: str) -> dict[str, str]:
    """Regular conjugation: 3sg/3pl present, 3sg past, infinitive, gerund."""
    stem, conj = lemma[:-2], lemma[-2:]
    if conj == "ar":
        return {"pres3s": stem + "a", "pres3p": stem + "an",
                "past3s": stem + "ó", "inf": lemma, "ger": stem + "ando"}
    return {"pres3s": stem + "e", "pres3p": stem + "en",
            "past3s": stem + "ió", "inf": lemma, "ger": stem + "iendo"}


def noun_plural(lemma: str) -> str:
    if lemma.endswith("z"):
        return lemma[:-1] + "ces"
    if lemma.endswith("ón"):
        return lemma[:-2] + "ones"
    if lemma.endswith("ín"):
        return lemma[:-2] + "ines"
    if lemma[-1] in "aeiouáéíóú":
        return lemma + "s"
    return lemma + "es"


def adj_forms(lemma: str) -> list[str]:
    if lemma in ADJS_O:
        base = lemma[:-1]
        return [lemma, base + "a", base + "os", base + "as"]
    if lemma.endswith("z"):
        return [lemma, lemma[:-1] + "ces"]
    if lemma[-1] in "aeiou":
        return [lemma, lemma + "s"]
    return [lemma, lemma + "es"]


def all_surfaces() -> dict[str, list[str]]:
    """Every surface form the generator can emit, grouped by word class."""
    nouns = []
    for lemma in NOUNS:
        nouns += [lemma, noun_plural(lemma)]
    verbs = []
    for lemma in VERBS:
        verbs += list(verb_forms(lemma).values())
    adjs = []
    for lemma in ADJS:
        adjs += adj_forms(lemma)
    return {
        "noun": nouns,
        "verb": verbs,
        "adj": adjs,
        "adv": list(ADVS),
        "function": ["el", "la", "los", "las", "un", "una", "unos", "unas",
                     *PREPS, *PRONOUNS, "y", "o", "pero", "que", "porque",
                     "cuando", "aunque", "si", "no", "sin", "embargo",
                     "además", "luego", "entonces", "también"],
    }


# ---------------------------------------------------------------------------
# sentence assembly

@dataclass
class Row:
    surface: str
    lemma: str
    upos: str
    morph: dict
    head: int      # 1-based within the sentence, 0 = root
    deprel: str


def _feat(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class _SentenceBuilder:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.rows: list[Row] = []

    def add(self, surface, lemma, upos, morph, head, deprel) -> int:
        self.rows.append(Row(surface, lemma, upos, _feat(morph), head, deprel))
        return len(self.rows)

    def noun_phrase(self, head: int, deprel: str, with_adj: float = 0.3) -> int:
        rng = self.rng
        lemma = rng.choice(list(NOUNS))
        gender = NOUNS[lemma]
        plural = rng.random() < 0.3
        art = {("Masc", False): "el", ("Masc", True): "los",
               ("Fem", False): "la", ("Fem", True): "las"}[(gender, plural)]
        number = "Plur" if plural else "Sing"
        det_ix = self.add(art, "el", "DET",
                          {"Definite": "Def", "Gender": gender,
                           "Number": number, "PronType": "Art"}, 0, "det")
        surface = noun_plural(lemma) if plural else lemma
        noun_ix = self.add(surface, lemma, "NOUN",
                           {"Gender": gender, "Number": number}, head, deprel)
        self.rows[det_ix - 1].head = noun_ix
        if rng.random() < with_adj:
            adj_lemma = rng.choice(ADJS)
            forms = adj_forms(adj_lemma)
            if len(forms) == 4:
                adj = forms[(0 if gender == "Masc" else 1) + (2 if plural else 0)]
                morph = {"Gender": gender, "Number": number}
            else:
                adj = forms[1 if plural else 0]
                morph = {"Number": number}
            self.add(adj, adj_lemma, "ADJ", morph, noun_ix, "amod")
        return noun_ix

    def verb(self, head: int, deprel: str, form: str = "pres3s") -> int:
        lemma = self.rng.choice(VERBS)
        surface = verb_forms(lemma)[form]
        morph = {"pres3s": {"Mood": "Ind", "Number": "Sing", "Person": "3",
                            "Tense": "Pres", "VerbForm": "Fin"},
                 "pres3p": {"Mood": "Ind", "Number": "Plur", "Person": "3",
                            "Tense": "Pres", "VerbForm": "Fin"},
                 "past3s": {"Mood": "Ind", "Number": "Sing", "Person": "3",
                            "Tense": "Past", "VerbForm": "Fin"},
                 "inf": {"VerbForm": "Inf"},
                 "ger": {"VerbForm": "Ger"}}[form]
        return self.add(surface, lemma, "VERB", morph, head, deprel)

    def clause(self, head: int, deprel: str, *, allow_sub: bool, long: bool) -> int:
        """Subject + (negation) + verb + optional complements; returns verb index."""
        rng = self.rng
        if rng.random() < 0.25:
            surface = rng.choice(list(PRONOUNS))
            person, number = PRONOUNS[surface]
            subj = self.add(surface, surface, "PRON",
                            {"Number": number, "Person": person, "PronType": "Prs"},
                            0, "nsubj")
        else:
            subj = self.noun_phrase(0, "nsubj")
        neg_ix = 0
        if rng.random() < 0.2:
            neg_ix = self.add("no", "no", "ADV", {"Polarity": "Neg"}, 0, "advmod")
        form = rng.choice(["pres3s", "pres3s", "pres3p", "past3s"])
        verb = self.verb(head, deprel, form)
        self.rows[subj - 1].head = verb
        if neg_ix:
            self.rows[neg_ix - 1].head = verb
        if rng.random() < 0.5:
            self.noun_phrase(verb, "obj")
        if rng.random() < (0.6 if long else 0.3):
            prep = rng.choice(PREPS)
            pix = self.add(prep, prep, "ADP", {}, 0, "case")
            oix = self.noun_phrase(verb, "obl")
            self.rows[pix - 1].head = oix
        if rng.random() < 0.35:
            adv = rng.choice(ADVS)
            self.add(adv, adv, "ADV", {}, verb, "advmod")
        if rng.random() < (0.3 if long else 0.1):
            self.verb(verb, "xcomp", "inf")
        if allow_sub and rng.random() < (0.55 if long else 0.2):
            kind = rng.choice(["ccomp", "advcl", "conj"])
            if kind == "conj":
                cix = self.add("y", "y", "CCONJ", {}, 0, "cc")
                v2 = self.clause(verb, "conj", allow_sub=False, long=False)
                self.rows[cix - 1].head = v2
            else:
                marker = "que" if kind == "ccomp" else rng.choice(["porque", "cuando", "aunque"])
                mix = self.add(marker, marker, "SCONJ", {}, 0, "mark")
                v2 = self.clause(verb, kind, allow_sub=long, long=False)
                self.rows[mix - 1].head = v2
        return verb

    def build(self, *, long: bool) -> list[Row]:
        root = self.clause(0, "root", allow_sub=True, long=long)
        if long and self.rng.random() < 0.5:
            prep = self.rng.choice(PREPS)
            pix = self.add(prep, prep, "ADP", {}, 0, "case")
            oix = self.noun_phrase(root, "obl")
            self.rows[pix - 1].head = oix
        self.add(".", ".", "PUNCT", {}, root, "punct")
        return self.rows


def synth_sentence(rng: random.Random, *, long: bool = False) -> str:
    rows = _SentenceBuilder(rng).build(long=long)
    lines = []
    for i, row in enumerate(rows, start=1):
        feats = "|".join(f"{k}={v}" for k, v in sorted(row.morph.items())) or "_"
        lines.append(f"{i}\t{row.surface}\t{row.lemma}\t{row.upos}\t_\t{feats}"
                     f"\t{row.head}\t{row.deprel}\t_\t_")
    return "\n".join(lines)


def synth_document(seed: int, *, n_sentences: int | None = None,
                   long: bool = False) -> str:
    """One CoNLL-U document (no ``# newdoc`` header)."""
    rng = random.Random(seed)
    if n_sentences is None:
        n_sentences = rng.randint(4, 9)
    n_pars = max(1, min(rng.randint(1, 3), n_sentences))
    starts = {0}
    if n_sentences > 1 and n_pars > 1:
        starts |= set(rng.sample(range(1, n_sentences), n_pars - 1))
    blocks = []
    for i in range(n_sentences):
        prefix = "# newpar\n" if i in starts else ""
        blocks.append(prefix + synth_sentence(rng, long=long))
    return "\n\n".join(blocks) + "\n"


def synth_corpus(seed: int, n_docs: int, *, n_sentences: int | None = None,
                 long: bool = False, id_prefix: str = "doc") -> str:
    """Multi-document CoNLL-U corpus with ``# newdoc id`` markers."""
    parts = []
    for i in range(n_docs):
        body = synth_document(seed * 100003 + i, n_sentences=n_sentences, long=long)
        parts.append(f"# newdoc id = {id_prefix}-{i:04d}\n" + body)
    return "\n".join(parts)
