"""Structured JSON dump of the in-memory models.

Every object carries a ``kind`` discriminator naming its model type; keys
are written sorted so equal models give byte-identical text. The schema is
documented in README.md.
"""

from __future__ import annotations

import json

from .errors import LexModelError, ModelError
from .onoma import DataCategory, LanguageSection, TermBase, TerminologicalEntry, TermSection
from .sema import (
    Context, Definition, Form, FormRepresentation, GrammaticalInfo,
    LexicalEntry, Lexicon, Sense, UsageMarker,
)
from .tei import TeiDocument


class JsonFormError(LexModelError, ValueError):
    """Input is not a valid JSON dump."""


def _cat(c: DataCategory):
    return {'kind': 'DataCategory', 'key': c.key, 'value': c.value,
            'lang': None if c.lang is None else str(c.lang)}


def _pairs(pairs):
    return [[k, v] for k, v in pairs]


def _gram(g):
    if g is None:
        return None
    return {'kind': 'GrammaticalInfo', 'pos': g.pos, 'gender': g.gender, 'other': _pairs(g.other)}


def _form(f: Form):
    return {
        'kind': 'Form',
        'formType': f.form_type,
        'representations': [{'kind': 'FormRepresentation', 'representation': r.kind,
                             'value': r.value} for r in f.representations],
        'gram': _gram(f.gram),
        'subforms': [_form(s) for s in f.subforms],
    }


def _sense(s: Sense):
    return {
        'kind': 'Sense',
        'label': s.label,
        'attrs': _pairs(s.attrs),
        'definitions': [{'kind': 'Definition', 'text': d.text, 'attrs': _pairs(d.attrs),
                         'inline': d.inline} for d in s.definitions],
        'usages': [{'kind': 'UsageMarker', 'type': u.usg_type, 'value': u.value}
                   for u in s.usages],
        'contexts': [{'kind': 'Context', 'quote': c.quote, 'type': c.context_type,
                      'lang': None if c.lang is None else str(c.lang), 'source': c.source}
                     for c in s.contexts],
        'equivalents': [{'kind': 'Equivalent', 'lang': str(lang), 'text': text}
                        for lang, text in s.equivalents],
        'subsenses': [_sense(x) for x in s.subsenses],
    }


def to_data(obj):
    """Model value to plain JSON-ready data."""
    if isinstance(obj, TermBase):
        return {'kind': 'TermBase', 'metadata': [_cat(c) for c in obj.metadata],
                'entries': [to_data(e) for e in obj.entries]}
    if isinstance(obj, TerminologicalEntry):
        return {
            'kind': 'TerminologicalEntry', 'id': obj.id,
            'categories': [_cat(c) for c in obj.categories],
            'languages': [{
                'kind': 'LanguageSection', 'lang': str(ls.lang),
                'categories': [_cat(c) for c in ls.categories],
                'terms': [{'kind': 'TermSection', 'term': ts.term,
                           'categories': [_cat(c) for c in ts.categories]}
                          for ts in ls.terms],
            } for ls in obj.languages],
        }
    if isinstance(obj, TeiDocument):
        return {'kind': 'TeiDocument', 'lexicon': to_data(obj.lexicon),
                'opaqueEntries': [{'position': p, 'xml': raw} for p, raw in obj.opaque_entries]}
    if isinstance(obj, Lexicon):
        return {'kind': 'Lexicon', 'lang': str(obj.lang), 'metadata': _pairs(obj.metadata),
                'entries': [to_data(e) for e in obj.entries]}
    if isinstance(obj, LexicalEntry):
        return {'kind': 'LexicalEntry', 'id': obj.id, 'forms': [_form(f) for f in obj.forms],
                'gram': _gram(obj.gram), 'senses': [_sense(s) for s in obj.senses]}
    raise TypeError(f'cannot dump {type(obj).__name__}')


def dumps(obj) -> str:
    return json.dumps(to_data(obj), ensure_ascii=False, sort_keys=True, indent=2) + '\n'


def _expect(d, kind):
    if not isinstance(d, dict) or d.get('kind') != kind:
        raise JsonFormError(f'expected an object of kind {kind!r}')
    return d


def _load_cat(d):
    d = _expect(d, 'DataCategory')
    return DataCategory(d['key'], d['value'], d.get('lang'))


def _load_gram(d):
    if d is None:
        return None
    d = _expect(d, 'GrammaticalInfo')
    return GrammaticalInfo(d.get('pos'), d.get('gender'), tuple(tuple(p) for p in d['other']))


def _load_form(d):
    d = _expect(d, 'Form')
    reps = tuple(FormRepresentation(_expect(r, 'FormRepresentation')['representation'], r['value'])
                 for r in d['representations'])
    return Form(d['formType'], reps, _load_gram(d.get('gram')),
                tuple(_load_form(s) for s in d['subforms']))


def _load_sense(d):
    d = _expect(d, 'Sense')
    return Sense(
        d.get('label'),
        tuple(Definition(_expect(x, 'Definition')['text'], tuple(tuple(p) for p in x['attrs']),
                         bool(x.get('inline', False))) for x in d['definitions']),
        tuple(UsageMarker(_expect(x, 'UsageMarker')['type'], x['value']) for x in d['usages']),
        tuple(Context(_expect(x, 'Context')['quote'], x['type'], x.get('lang'), x.get('source'))
              for x in d['contexts']),
        tuple((_expect(x, 'Equivalent')['lang'], x['text']) for x in d['equivalents']),
        tuple(_load_sense(x) for x in d['subsenses']),
        tuple(tuple(p) for p in d['attrs']),
    )


def _load_entry(d):
    d = _expect(d, 'LexicalEntry')
    return LexicalEntry(tuple(_load_form(f) for f in d['forms']), _load_gram(d.get('gram')),
                        tuple(_load_sense(s) for s in d['senses']), d.get('id'))


def from_data(d):
    """Inverse of :func:`to_data`."""
    try:
        kind = d.get('kind') if isinstance(d, dict) else None
        if kind == 'TermBase':
            entries = []
            for e in d['entries']:
                e = _expect(e, 'TerminologicalEntry')
                langs = tuple(
                    LanguageSection(
                        _expect(ls, 'LanguageSection')['lang'],
                        tuple(TermSection(_expect(t, 'TermSection')['term'],
                                          tuple(_load_cat(c) for c in t['categories']))
                              for t in ls['terms']),
                        tuple(_load_cat(c) for c in ls['categories']))
                    for ls in e['languages'])
                entries.append(TerminologicalEntry(
                    e.get('id'), tuple(_load_cat(c) for c in e['categories']), langs))
            return TermBase(tuple(entries), tuple(_load_cat(c) for c in d['metadata']))
        if kind == 'TeiDocument':
            lex = _expect(d['lexicon'], 'Lexicon')
            lexicon = Lexicon(lex['lang'], tuple(_load_entry(e) for e in lex['entries']),
                              tuple(tuple(p) for p in lex['metadata']))
            return TeiDocument(lexicon, tuple((o['position'], o['xml'])
                                              for o in d['opaqueEntries']))
        if kind == 'Lexicon':
            return Lexicon(d['lang'], tuple(_load_entry(e) for e in d['entries']),
                           tuple(tuple(p) for p in d['metadata']))
    except JsonFormError:
        raise
    except (KeyError, TypeError, ValueError, ModelError) as exc:
        raise JsonFormError(f'invalid {kind} dump: {exc}') from None
    raise JsonFormError(f'unsupported kind {kind!r}')


def loads(text):
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise JsonFormError(f'not JSON: {exc}') from None
    return from_data(data)
