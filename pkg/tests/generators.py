"""Random model builders shared by the property and acceptance tests.

Every builder takes a ``random.Random`` so the same code serves seeded loops
(acceptance counts) and hypothesis (``st.randoms()``).
"""

from __future__ import annotations

import random
import unicodedata

from lexmodel import (
    Context, DataCategory, Definition, Form, FormRepresentation, GrammaticalInfo,
    LanguageSection, LexicalEntry, Sense, TermBase, TerminologicalEntry, TermSection,
    UsageMarker,
)

LANGS = ('en', 'fr', 'de', 'es', 'pt-BR', 'zh-Hant')
# letters with accents and XML-special characters; no \r, no control chars
ALPHABET = 'abcdeéèfghiïjklmnoöpqrstuvwxyzßçαβ<>&"\''
WORDS = ('acide', 'Absatz', 'courriel', 'e-mail', 'poussin', 'term', 'Zool.', 'a&b', '<x>')


def text(rng: random.Random, max_words: int = 3) -> str:
    words = []
    for _ in range(rng.randint(1, max_words)):
        if rng.random() < 0.3:
            words.append(rng.choice(WORDS))
        else:
            words.append(''.join(rng.choice(ALPHABET) for _ in range(rng.randint(1, 8))))
    return unicodedata.normalize('NFC', ' '.join(words))


def maybe_lang(rng):
    return rng.choice(LANGS) if rng.random() < 0.3 else None


# onomasiological side

CONCEPT_KEYS = ('subjectField', 'definition', 'conceptIdentifier', 'note', 'conceptOrigin')
LANG_KEYS = ('definition', 'note', 'source')
TERM_KEYS = ('partOfSpeech', 'gender', 'termType', 'administrativeStatus', 'register',
             'example', 'termIdentifier', 'note')
STATUS = ('preferredTerm', 'deprecatedTerm', 'admittedTerm')


def category(rng, keys) -> DataCategory:
    key = rng.choice(keys)
    value = rng.choice(STATUS) if key == 'administrativeStatus' else text(rng)
    return DataCategory(key, value, maybe_lang(rng))


def categories(rng, keys, most=3):
    return tuple(category(rng, keys) for _ in range(rng.randint(0, most)))


SHARED_TERMS = ('bank', 'Bank', 'spring', 'Absatz', 'cell')


def term(rng):
    # a quarter of the terms come from a tiny vocabulary so homographs occur
    return rng.choice(SHARED_TERMS) if rng.random() < 0.25 else text(rng)


def termbase(rng: random.Random, max_entries=5, max_langs=3, max_terms=4) -> TermBase:
    """A base that passes the minimal profile."""
    entries = []
    for i in range(rng.randint(0, max_entries)):
        langs = rng.sample(LANGS, rng.randint(1, max_langs))
        sections = tuple(
            LanguageSection(lang, tuple(TermSection(term(rng), categories(rng, TERM_KEYS))
                                        for _ in range(rng.randint(1, max_terms))),
                            categories(rng, LANG_KEYS, 2))
            for lang in langs)
        ident = f'c{i + 1}' if rng.random() < 0.7 else None
        entries.append(TerminologicalEntry(ident, categories(rng, CONCEPT_KEYS), sections))
    return TermBase(tuple(entries), categories(rng, ('sourceDesc', 'note'), 2))


def shared_termbase(rng: random.Random) -> TermBase:
    """Small vocabulary so synonyms, homographs and polysemy actually occur."""
    vocab = SHARED_TERMS + ('absatz',)
    entries = []
    for _ in range(rng.randint(1, 5)):
        langs = rng.sample(LANGS[:3], rng.randint(1, 3))
        sections = tuple(
            LanguageSection(lang, tuple(TermSection(t) for t in
                                        rng.sample(vocab, rng.randint(1, 4))))
            for lang in langs)
        entries.append(TerminologicalEntry(None, (), sections))
    return TermBase(tuple(entries))


def restricted_termbase(rng: random.Random, max_entries=5, max_langs=3, max_terms=4) -> TermBase:
    """A base the two projections can rebuild exactly.

    Every term occurs once per language across the whole base, definitions
    and subject fields sit at concept level, and term categories are limited
    to what survives the trip through a dictionary sense.
    """
    used = {lang: set() for lang in LANGS}
    entries = []
    for _ in range(rng.randint(0, max_entries)):
        cats = []
        for _ in range(rng.randint(1, 2)):
            cats.append(DataCategory('definition', text(rng, 5), maybe_lang(rng)))
        for _ in range(rng.randint(0, 2)):
            cats.append(DataCategory('subjectField', text(rng, 2)))
        cats = list(dict.fromkeys(cats))
        sections = []
        for lang in rng.sample(LANGS, rng.randint(1, max_langs)):
            terms = []
            for _ in range(rng.randint(1, max_terms)):
                term = text(rng, 2)
                if term in used[lang]:
                    continue
                used[lang].add(term)
                terms.append(TermSection(term, restricted_term_categories(rng)))
            if terms:
                sections.append(LanguageSection(lang, tuple(terms)))
        if sections:
            entries.append(TerminologicalEntry(None, tuple(cats), tuple(sections)))
    return TermBase(tuple(entries))


def restricted_term_categories(rng):
    cats = []
    if rng.random() < 0.5:
        cats.append(DataCategory('partOfSpeech', rng.choice(('noun', 'verb', 'adjective'))))
    if rng.random() < 0.3:
        cats.append(DataCategory('gender', rng.choice(('masculine', 'feminine'))))
    if rng.random() < 0.2:
        cats.append(DataCategory('termType', rng.choice(('acronym', 'fullForm'))))
    if rng.random() < 0.3:
        cats.append(DataCategory('register', rng.choice(('colloquial', 'technical'))))
    if rng.random() < 0.2:
        cats.append(DataCategory('administrativeStatus', 'deprecatedTerm'))
    for _ in range(rng.randint(0, 2)):
        cats.append(DataCategory('example', text(rng, 4), maybe_lang(rng)))
    return tuple(dict.fromkeys(cats))


# semasiological side

GRAM_OTHER = ('number', 'case', 'tns', 'subc', 'valency')
SENSE_ATTR_KEYS = ('type', 'xml:lang', 'resp', 'corresp')
DEF_ATTR_KEYS = ('type', 'xml:lang', 'resp')


def gram(rng):
    pos = rng.choice(('n.', 'v.', 'adj.')) if rng.random() < 0.6 else None
    gender = rng.choice(('m.', 'f.')) if rng.random() < 0.4 else None
    other = tuple((k, text(rng, 1)) for k in rng.sample(GRAM_OTHER, rng.randint(0, 2)))
    if not (pos or gender or other):
        pos = 'n.'
    return GrammaticalInfo(pos, gender, other)


def attrs(rng, keys):
    """Attribute pairs already in the writer's canonical order."""
    chosen = [k for k in keys if rng.random() < 0.25]
    return tuple((k, rng.choice(LANGS) if k == 'xml:lang' else text(rng, 2)) for k in chosen)


def form(rng, depth=1, max_depth=3, form_type=None) -> Form:
    kinds = ('orthography', 'pronunciation', 'hyphenation', 'transliteration')
    reps = [FormRepresentation('orthography', text(rng, 2))]
    reps += [FormRepresentation(rng.choice(kinds), text(rng, 2))
             for _ in range(rng.randint(0, 2))]
    subs = ()
    if depth < max_depth and rng.random() < 0.25:
        subs = tuple(form(rng, depth + 1, max_depth) for _ in range(rng.randint(1, 2)))
    ftype = form_type or rng.choice(('lemma', 'inflected', 'variant', 'unspecified'))
    return Form(ftype, tuple(reps), gram(rng) if rng.random() < 0.4 else None, subs)


def context(rng) -> Context:
    ctype = rng.choice(('example', 'translation', ''))
    lang = maybe_lang(rng)
    source = text(rng, 2) if rng.random() < 0.3 else None
    if ctype == 'translation' and lang is not None and source is None:
        source = text(rng, 2)  # otherwise it reads back as an equivalent
    return Context(text(rng, 4), ctype, lang, source)


def sense(rng, depth=1, max_depth=4) -> Sense:
    subs = ()
    if depth < max_depth and rng.random() < 0.35:
        subs = tuple(sense(rng, depth + 1, max_depth) for _ in range(rng.randint(1, 3)))
    defs = tuple(Definition(text(rng, 5), attrs(rng, DEF_ATTR_KEYS))
                 for _ in range(rng.randint(0, 2)))
    usages = tuple(UsageMarker(rng.choice(('dom', 'register', 'time', 'geo', 'style', 'hint', '')),
                               text(rng, 2)) for _ in range(rng.randint(0, 2)))
    contexts = tuple(context(rng) for _ in range(rng.randint(0, 2)))
    eqs = tuple((rng.choice(LANGS), text(rng, 2)) for _ in range(rng.randint(0, 2)))
    if not (defs or usages or contexts or eqs or subs):
        defs = (Definition(text(rng, 5)),)
    label = str(rng.randint(1, 9)) if rng.random() < 0.5 else None
    return Sense(label, defs, usages, contexts, eqs, subs, attrs(rng, SENSE_ATTR_KEYS))


def lexical_entry(rng: random.Random, max_depth=4, ident=None) -> LexicalEntry:
    forms = tuple(form(rng) for _ in range(rng.randint(1, 3)))
    senses = tuple(sense(rng, 1, max_depth) for _ in range(rng.randint(0, 3)))
    return LexicalEntry(forms, gram(rng) if rng.random() < 0.3 else None, senses, ident)
