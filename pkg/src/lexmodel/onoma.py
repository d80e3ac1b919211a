"""Concept-oriented (terminological) model: entry, language section, term section.

All values are frozen. Lists handed to constructors are stored as tuples, so
a model can be shared freely once built; changes are made by rebuilding with
:func:`dataclasses.replace`.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Tuple

from .errors import ModelError, SameLanguage
from .report import ERROR, WARNING, Finding, ValidationReport, merge

_LANG_RE = re.compile(r'[a-z]{2,3}(-[A-Za-z0-9]{2,8})*')


class LangCode(str):
    """A language tag compared in normalized form.

    The primary subtag is lower-cased, two-letter region subtags are
    upper-cased and four-letter script subtags title-cased, so ``'FR-ca'``
    and ``'fr-CA'`` are the same value.
    """

    def __new__(cls, tag):
        if isinstance(tag, LangCode):
            return tag
        if not isinstance(tag, str):
            raise ModelError(f'language tag must be text, not {type(tag).__name__}')
        parts = tag.strip().replace('_', '-').split('-')
        norm = [parts[0].lower()]
        for sub in parts[1:]:
            if len(sub) == 2 and sub.isalpha():
                norm.append(sub.upper())
            elif len(sub) == 4 and sub.isalpha():
                norm.append(sub.title())
            else:
                norm.append(sub.lower())
        value = '-'.join(norm)
        if not _LANG_RE.fullmatch(value):
            raise ModelError(f'invalid language tag: {tag!r}')
        return super().__new__(cls, value)

    def __repr__(self):
        return f'LangCode({str(self)!r})'


def _opt_lang(value) -> Optional[LangCode]:
    return None if value is None else LangCode(value)


def nfc(text: str) -> str:
    return unicodedata.normalize('NFC', text)


# Data categories named in the default registry. Unknown keys are kept as is.
REGISTRY = (
    'term', 'language', 'subjectField', 'definition', 'partOfSpeech', 'gender',
    'administrativeStatus', 'register', 'source', 'responsibility',
    'creationDate', 'modificationDate', 'termIdentifier', 'conceptIdentifier',
    'conceptOrigin', 'originatingDatabaseName', 'example',
)
ADMINISTRATIVE_STATUS = ('preferredTerm', 'deprecatedTerm', 'admittedTerm')
# Keys whose value may be empty. The default registry has none.
FLAG_KEYS: frozenset = frozenset()
# Categories that build the model's structure and never appear as descriptors.
STRUCTURAL_KEYS = frozenset({'term', 'language'})


@dataclass(frozen=True)
class DataCategory:
    key: str
    value: str
    lang: Optional[LangCode] = None

    def __post_init__(self):
        if not isinstance(self.key, str) or not self.key:
            raise ModelError('data category key must be non-empty text')
        if not isinstance(self.value, str):
            raise ModelError(f'{self.key}: value must be text')
        if not self.value and self.key not in FLAG_KEYS:
            raise ModelError(f'{self.key}: empty value')
        if self.key == 'administrativeStatus' and self.value not in ADMINISTRATIVE_STATUS:
            raise ModelError(f'administrativeStatus {self.value!r} not in {ADMINISTRATIVE_STATUS}')
        object.__setattr__(self, 'lang', _opt_lang(self.lang))


def _categories(values, level: str) -> Tuple[DataCategory, ...]:
    values = tuple(values)
    for cat in values:
        if not isinstance(cat, DataCategory):
            raise ModelError(f'{level}: expected DataCategory, got {cat!r}')
        if cat.key in STRUCTURAL_KEYS:
            raise ModelError(f'{level}: {cat.key!r} is structural, not a descriptor')
    return values


def first_value(categories, key: str) -> Optional[str]:
    for cat in categories:
        if cat.key == key:
            return cat.value
    return None


@dataclass(frozen=True)
class TermSection:
    term: str
    categories: Tuple[DataCategory, ...] = ()

    def __post_init__(self):
        if not isinstance(self.term, str):
            raise ModelError('term must be text')
        object.__setattr__(self, 'term', nfc(self.term))
        object.__setattr__(self, 'categories', _categories(self.categories, 'term section'))


@dataclass(frozen=True)
class LanguageSection:
    lang: LangCode
    terms: Tuple[TermSection, ...] = ()
    categories: Tuple[DataCategory, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'lang', LangCode(self.lang))
        terms = tuple(self.terms)
        if not all(isinstance(t, TermSection) for t in terms):
            raise ModelError('language section terms must be TermSection values')
        object.__setattr__(self, 'terms', terms)
        object.__setattr__(self, 'categories', _categories(self.categories, 'language section'))


@dataclass(frozen=True)
class TerminologicalEntry:
    id: Optional[str] = None
    categories: Tuple[DataCategory, ...] = ()
    languages: Tuple[LanguageSection, ...] = ()

    def __post_init__(self):
        if self.id is not None and (not isinstance(self.id, str) or not self.id):
            raise ModelError(f'entry id must be non-empty text: {self.id!r}')
        langs = tuple(self.languages)
        if not all(isinstance(ls, LanguageSection) for ls in langs):
            raise ModelError('entry languages must be LanguageSection values')
        object.__setattr__(self, 'languages', langs)
        object.__setattr__(self, 'categories', _categories(self.categories, 'entry'))

    def section(self, lang) -> Optional[LanguageSection]:
        lang = LangCode(lang)
        for ls in self.languages:
            if ls.lang == lang:
                return ls
        return None

    @property
    def langs(self) -> Tuple[LangCode, ...]:
        seen = []
        for ls in self.languages:
            if ls.lang not in seen:
                seen.append(ls.lang)
        return tuple(seen)


@dataclass(frozen=True)
class TermBase:
    entries: Tuple[TerminologicalEntry, ...] = ()
    metadata: Tuple[DataCategory, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        seen = set()
        for e in entries:
            if not isinstance(e, TerminologicalEntry):
                raise ModelError('term base entries must be TerminologicalEntry values')
            if e.id is not None:
                if e.id in seen:
                    raise ModelError(f'duplicate entry id {e.id!r}')
                seen.add(e.id)
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'metadata', _categories(self.metadata, 'term base'))

    def __len__(self):
        return len(self.entries)


def entry_ids(base: TermBase) -> List[str]:
    """Entry ids, with positional ``entry-N`` ids filling the gaps."""
    return [e.id if e.id is not None else f'entry-{i}'
            for i, e in enumerate(base.entries, 1)]


Profile = Literal['minimal', 'recommended']


def validate_onoma(entry: TerminologicalEntry, profile: Profile = 'minimal',
                   path: str = 'termEntry[1]', position=(0,)) -> ValidationReport:
    """Check an entry against a profile.

    ``minimal`` covers the structure implied by the two mandatory
    categories (every language section has a term section, every term is
    non-empty) plus one section per language. ``recommended`` adds warnings
    for a missing subject field, definition, or part of speech.
    """
    if profile not in ('minimal', 'recommended'):
        raise ValueError(f'unknown profile {profile!r}')
    position = tuple(position)
    out = []
    if not entry.languages:
        out.append(Finding(ERROR, 'MISSING_LANG_SECTION', path,
                           'entry has no language section', position))
    seen = set()
    offset = len(entry.categories)
    for i, ls in enumerate(entry.languages, 1):
        ls_path = f'{path}/langSet[{i}]'
        ls_pos = position + (offset + i - 1,)
        if ls.lang in seen:
            out.append(Finding(ERROR, 'DUPLICATE_LANG', ls_path,
                               f'second section for {ls.lang}', ls_pos))
        seen.add(ls.lang)
        if not ls.terms:
            out.append(Finding(ERROR, 'MISSING_TERM_SECTION', ls_path,
                               f'no term section for {ls.lang}', ls_pos))
        toff = len(ls.categories)
        for j, ts in enumerate(ls.terms, 1):
            if not ts.term.strip():
                out.append(Finding(ERROR, 'EMPTY_TERM', f'{ls_path}/tig[{j}]',
                                   'term text is empty', ls_pos + (toff + j - 1,)))
    if profile == 'recommended':
        keys = {c.key for c in entry.categories}
        if 'subjectField' not in keys:
            out.append(Finding(WARNING, 'MISSING_SUBJECT_FIELD', path,
                               'no subjectField at concept level', position))
        lang_keys = {c.key for ls in entry.languages for c in ls.categories}
        if 'definition' not in keys and 'definition' not in lang_keys:
            out.append(Finding(WARNING, 'MISSING_DEFINITION', path,
                               'no definition at concept or language level', position))
        lacking = [ts.term for ls in entry.languages for ts in ls.terms
                   if first_value(ts.categories, 'partOfSpeech') is None]
        if lacking:
            out.append(Finding(WARNING, 'MISSING_PART_OF_SPEECH', path,
                               'no partOfSpeech on: ' + ', '.join(lacking), position))
    return ValidationReport(tuple(out))


def validate_termbase(base: TermBase, profile: Profile = 'minimal',
                      prefix: str = '', prefix_position=()) -> ValidationReport:
    reports = []
    for i, entry in enumerate(base.entries, 1):
        path = f'{prefix}termEntry[{i}]'
        reports.append(validate_onoma(entry, profile, path,
                                      tuple(prefix_position) + (i - 1,)))
    return merge(reports)


def synonyms(entry: TerminologicalEntry, lang) -> List[str]:
    """Terms of the entry's section for ``lang``, in document order."""
    ls = entry.section(lang)
    return [] if ls is None else [ts.term for ts in ls.terms]


def equivalents(entry: TerminologicalEntry, lang_a, lang_b) -> List[Tuple[str, str]]:
    """Cartesian product of the two sections' terms.

    Raises SameLanguage when both tags normalize to the same language.
    """
    lang_a, lang_b = LangCode(lang_a), LangCode(lang_b)
    if lang_a == lang_b:
        raise SameLanguage(f'equivalents need two languages, got {lang_a} twice')
    return [(a, b) for a in synonyms(entry, lang_a) for b in synonyms(entry, lang_b)]


def _match_key(term: str, casefold: bool) -> str:
    term = nfc(term)
    return term.casefold() if casefold else term


def index_by_term(base: TermBase, lang, casefold: bool = False) -> Dict[str, List[str]]:
    """Map every term in ``lang`` to the ids of the entries containing it.

    Keys follow first appearance in the base; an id is listed once per term
    even if the term repeats inside one entry. With ``casefold`` the key is
    the first surface form seen for the folded term.
    """
    lang = LangCode(lang)
    index: Dict[str, List[str]] = {}
    surface: Dict[str, str] = {}
    for eid, entry in zip(entry_ids(base), base.entries):
        for ls in entry.languages:
            if ls.lang != lang:
                continue
            for ts in ls.terms:
                key = _match_key(ts.term, casefold)
                shown = surface.setdefault(key, ts.term)
                ids = index.setdefault(shown, [])
                if eid not in ids:
                    ids.append(eid)
    return index


def accidental_polysemy(base: TermBase, casefold: bool = False
                        ) -> Dict[Tuple[LangCode, str], List[str]]:
    """(language, term) pairs attached to two or more entries."""
    langs = []
    for entry in base.entries:
        for lang in entry.langs:
            if lang not in langs:
                langs.append(lang)
    out = {}
    for lang in langs:
        for term, ids in index_by_term(base, lang, casefold).items():
            if len(ids) >= 2:
                out[(lang, term)] = ids
    return out
