"""Projections between the concept-oriented and word-oriented models.

``sema_projection`` turns one language of a termbase into a dictionary: one
lexical entry per distinct surface form, one sense per concept the form
belongs to. ``onoma_projection`` goes the other way: every sense carrying a
definition or an equivalent becomes a concept. Senses from different lexica
that name the same source concept (``corresp`` attribute, which
``sema_projection`` sets) are merged back into one entry.

Whatever has no home on the target side is listed in the returned loss
report; nothing is dropped silently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from .errors import DuplicateObjectLanguage, InvalidModel
from .onoma import (
    DataCategory, LangCode, LanguageSection, TermBase, TerminologicalEntry,
    TermSection, entry_ids, first_value, nfc, validate_termbase,
)
from .report import INFO, WARNING, Finding, LossReport, ValidationReport
from .sema import (
    Context, Definition, Form, FormRepresentation, GrammaticalInfo,
    LexicalEntry, Lexicon, Sense, UsageMarker, iter_forms, iter_senses,
    lemma_info, validate_sema,
)

# sense attribute naming the concept a sense was projected from
PROVENANCE = 'corresp'
DEPRECATED = 'deprecated'

# usage axes without a TMF home, and the term-level category each lands in
USAGE_CATEGORY = {
    'register': 'register',
    'time': 'temporalQualifier',
    'geo': 'geographicalUsage',
    'style': 'style',
}
CATEGORY_USAGE = {v: k for k, v in USAGE_CATEGORY.items()}

_CONCEPT_KEYS_KEPT = frozenset({'definition', 'subjectField', 'conceptIdentifier'})


def _check_scheme(scheme: str, name: str):
    if scheme.count('%') != 1 or len(re.findall(r'%d', scheme)) != 1:
        raise ValueError(f'{name} must contain exactly one %d counter: {scheme!r}')


@dataclass(frozen=True)
class ProjectionOptions:
    concat_synonyms_as_variants: bool = False
    definition_placement: Literal['conceptLevel', 'languageLevel'] = 'conceptLevel'
    id_scheme: str = 'C%d'
    entry_id_scheme: str = 'E%d'
    split_by_pos: bool = False

    def __post_init__(self):
        if self.definition_placement not in ('conceptLevel', 'languageLevel'):
            raise ValueError(f'unknown definition placement {self.definition_placement!r}')
        _check_scheme(self.id_scheme, 'id_scheme')
        _check_scheme(self.entry_id_scheme, 'entry_id_scheme')


DEFAULT_OPTIONS = ProjectionOptions()


def _definition(cat: DataCategory) -> Definition:
    return Definition(cat.value, (('xml:lang', str(cat.lang)),) if cat.lang else ())


class _Headword:
    def __init__(self, surface, gram):
        self.surface = surface
        self.gram = gram
        self.variants: List[str] = []
        self.senses: List[Sense] = []


def sema_projection(base: TermBase, lang, opts: ProjectionOptions = DEFAULT_OPTIONS
                    ) -> Tuple[Lexicon, LossReport]:
    """Dictionary view of one language of a termbase.

    Raises InvalidModel when an entry fails the minimal profile.
    """
    pre = validate_termbase(base, 'minimal')
    if pre.errors:
        raise InvalidModel('term base fails the minimal profile', pre)
    lang = LangCode(lang)
    loss: List[Finding] = []
    heads: Dict[tuple, _Headword] = {}

    for i, (eid, entry) in enumerate(zip(entry_ids(base), base.entries), 1):
        epath = f'termEntry[{i}]'
        section = entry.section(lang)
        if section is None:
            continue
        ls_index = entry.languages.index(section) + 1
        provenance = first_value(entry.categories, 'conceptIdentifier') or eid
        defs = [_definition(c) for c in entry.categories if c.key == 'definition']
        defs += [_definition(c) for c in section.categories if c.key == 'definition']
        doms = [UsageMarker('dom', c.value) for c in entry.categories if c.key == 'subjectField']
        for k, c in enumerate(entry.categories, 1):
            if c.key not in _CONCEPT_KEYS_KEPT:
                loss.append(Finding(INFO, 'LOSSY_CATEGORY', epath,
                                    f'concept-level {c.key}={c.value!r} not projected', (i - 1,)))
        for c in section.categories:
            if c.key != 'definition':
                loss.append(Finding(INFO, 'LOSSY_CATEGORY', f'{epath}/langSet[{ls_index}]',
                                    f'language-level {c.key}={c.value!r} not projected',
                                    (i - 1, ls_index)))
        equivalents = [(other.lang, ts.term) for other in entry.languages
                       if other.lang != lang for ts in other.terms]

        for j, ts in enumerate(section.terms, 1):
            tpath = f'{epath}/langSet[{ls_index}]/tig[{j}]'
            tpos = (i - 1, ls_index, j)
            usages = list(doms)
            contexts = []
            pos = gender = None
            other = []
            for c in ts.categories:
                if c.key == 'partOfSpeech' and pos is None:
                    pos = c.value
                elif c.key == 'gender' and gender is None:
                    gender = c.value
                elif c.key == 'termType':
                    other.append(('termType', c.value))
                elif c.key in CATEGORY_USAGE:
                    usages.append(UsageMarker(CATEGORY_USAGE[c.key], c.value))
                elif c.key == 'example':
                    contexts.append(Context(c.value, 'example', c.lang))
                elif c.key == 'administrativeStatus' and c.value == 'deprecatedTerm':
                    usages.append(UsageMarker('register', DEPRECATED))
                else:
                    loss.append(Finding(INFO, 'LOSSY_CATEGORY', tpath,
                                        f'term-level {c.key}={c.value!r} not projected', tpos))
            gram = GrammaticalInfo(pos, gender, tuple(other)) if (pos or gender or other) else None
            key = (ts.term, pos) if opts.split_by_pos else (ts.term,)
            head = heads.get(key)
            if head is None:
                head = heads[key] = _Headword(ts.term, gram)
            elif gram is not None and head.gram != gram:
                loss.append(Finding(WARNING, 'LOSSY_CATEGORY', tpath,
                                    f'grammar of {ts.term!r} differs from an earlier concept; '
                                    'first one kept', tpos))
            if opts.concat_synonyms_as_variants:
                for other_ts in section.terms:
                    if other_ts.term != ts.term and other_ts.term not in head.variants:
                        head.variants.append(other_ts.term)
            head.senses.append(Sense(
                definitions=tuple(defs), usages=tuple(usages), contexts=tuple(contexts),
                equivalents=tuple(equivalents), attrs=((PROVENANCE, provenance),)))

    entries = []
    for n, head in enumerate(heads.values(), 1):
        forms = [Form('lemma', (FormRepresentation('orthography', head.surface),), head.gram)]
        forms += [Form('variant', (FormRepresentation('orthography', v),)) for v in head.variants]
        entries.append(LexicalEntry(tuple(forms), None, tuple(head.senses),
                                    opts.entry_id_scheme % n))
    return Lexicon(lang, tuple(entries)), ValidationReport(tuple(loss))


class _Concept:
    def __init__(self):
        self.categories: List[DataCategory] = []
        self.sections: Dict[LangCode, Dict[str, List[DataCategory]]] = {}
        self.section_categories: Dict[LangCode, List[DataCategory]] = {}

    def concept_cat(self, cat):
        if cat not in self.categories:
            self.categories.append(cat)

    def term(self, lang, text, cats=()):
        terms = self.sections.setdefault(lang, {})
        self.section_categories.setdefault(lang, [])
        held = terms.setdefault(nfc(text), [])
        for c in cats:
            if c not in held:
                held.append(c)

    def lang_cat(self, lang, cat):
        held = self.section_categories.setdefault(lang, [])
        self.sections.setdefault(lang, {})
        if cat not in held:
            held.append(cat)

    def build(self, ident) -> TerminologicalEntry:
        sections = tuple(
            LanguageSection(lang, tuple(TermSection(t, tuple(c)) for t, c in terms.items()),
                            tuple(self.section_categories.get(lang, ())))
            for lang, terms in self.sections.items())
        return TerminologicalEntry(ident, tuple(self.categories), sections)


def _gram_categories(gram: Optional[GrammaticalInfo]) -> List[DataCategory]:
    if gram is None:
        return []
    cats = []
    if gram.pos:
        cats.append(DataCategory('partOfSpeech', gram.pos))
    if gram.gender:
        cats.append(DataCategory('gender', gram.gender))
    cats += [DataCategory(k, v) for k, v in gram.other if v]
    return cats


def _def_lang(d: Definition, node, loss) -> Optional[LangCode]:
    raw = d.attr('xml:lang')
    if raw is None:
        return None
    try:
        return LangCode(raw)
    except ValueError:
        loss.append(Finding(INFO, 'LOSSY_CATEGORY', node.path,
                            f'definition language {raw!r} is not a valid tag', node.position))
        return None


def onoma_projection(lexica: Sequence[Lexicon], opts: ProjectionOptions = DEFAULT_OPTIONS
                     ) -> Tuple[TermBase, LossReport]:
    """Termbase view of one or more dictionaries with distinct languages.

    Raises DuplicateObjectLanguage when two lexica share a language.
    """
    langs = [lex.lang for lex in lexica]
    if len(set(langs)) != len(langs):
        raise DuplicateObjectLanguage(f'object languages repeat: {", ".join(langs)}')
    loss: List[Finding] = []
    concepts: Dict[tuple, _Concept] = {}

    for li, lex in enumerate(lexica, 1):
        for ei, entry in enumerate(lex.entries, 1):
            epath = f'lexicon[{li}]/entry[{ei}]'
            epos = (li - 1, ei - 1)
            lemma = lemma_info(entry)
            if lemma.text is None:
                loss.append(Finding(WARNING, 'LOSSY_FORM', epath,
                                    'entry has no orthography; not projected', epos))
                continue
            lemma_form = next(f for f in entry.forms if f.values('orthography')
                              and (f.form_type == 'lemma' or not lemma.explicit))
            # form-level grammar wins over entry-level grammar
            base_cats = _gram_categories(lemma_form.gram or entry.gram)
            variants = []
            for node in iter_forms(entry, epath, epos):
                f = node.form
                if f is lemma_form:
                    extra = [r for r in f.representations
                             if r.kind != 'orthography' or r.value != lemma.text]
                    for r in extra:
                        loss.append(Finding(INFO, 'LOSSY_FORM', node.path,
                                            f'{r.kind} {r.value!r} not projected', node.position))
                elif f.form_type == 'variant' and node.depth == 1 and f.values('orthography'):
                    variants.append((f.values('orthography')[0], _gram_categories(f.gram)))
                else:
                    shown = ', '.join(r.value for r in f.representations)
                    loss.append(Finding(INFO, 'LOSSY_FORM', node.path,
                                        f'{f.form_type} form {shown!r} not projected',
                                        node.position))

            for node in iter_senses(entry, epath, epos):
                s = node.sense
                if not s.definitions and not s.equivalents:
                    lost = ', '.join(f'{u.usg_type}:{u.value}' for u in s.usages)
                    loss.append(Finding(WARNING, 'NO_DEFINITION', node.path,
                                        'sense has no definition or equivalent'
                                        + (f'; lost {lost}' if lost else ''), node.position))
                    continue
                corresp = s.attr(PROVENANCE)
                key = ('corresp', corresp) if corresp else ('node', li, ei, node.path)
                concept = concepts.setdefault(key, _Concept())

                term_cats = list(base_cats)
                for k, u in enumerate(s.usages, 1):
                    if not u.value:
                        continue
                    if u.usg_type == 'dom':
                        concept.concept_cat(DataCategory('subjectField', u.value))
                    elif u.usg_type == 'register' and u.value == DEPRECATED:
                        term_cats.append(DataCategory('administrativeStatus', 'deprecatedTerm'))
                    elif u.usg_type in USAGE_CATEGORY:
                        term_cats.append(DataCategory(USAGE_CATEGORY[u.usg_type], u.value))
                        loss.append(Finding(INFO, 'LOSSY_USAGE', f'{node.path}/usg[{k}]',
                                            f'{u.usg_type} marker {u.value!r} kept as '
                                            f'term-level {USAGE_CATEGORY[u.usg_type]}',
                                            node.position + (k - 1,)))
                    else:
                        loss.append(Finding(WARNING, 'LOSSY_USAGE', f'{node.path}/usg[{k}]',
                                            f'usage type {u.usg_type!r} has no target',
                                            node.position + (k - 1,)))
                for k, c in enumerate(s.contexts, 1):
                    if c.context_type == 'example' and c.quote:
                        term_cats.append(DataCategory('example', c.quote, c.lang))
                    else:
                        loss.append(Finding(INFO, 'LOSSY_CONTEXT', f'{node.path}/cit[{k}]',
                                            f'{c.context_type or "untyped"} context not projected',
                                            node.position))
                for d in s.definitions:
                    if not d.text:
                        continue
                    if opts.definition_placement == 'conceptLevel':
                        concept.concept_cat(DataCategory('definition', d.text,
                                                         _def_lang(d, node, loss)))
                    else:
                        concept.lang_cat(lex.lang, DataCategory('definition', d.text))
                concept.term(lex.lang, lemma.text, term_cats)
                for text, cats in variants:
                    concept.term(lex.lang, text, cats)
                for eq_lang, text in s.equivalents:
                    if text:
                        concept.term(eq_lang, text)

    entries = [c.build(opts.id_scheme % n) for n, c in enumerate(concepts.values(), 1)]
    return TermBase(tuple(entries)), ValidationReport(tuple(loss))


def lmf_conformance(entry: LexicalEntry, path: str = 'entry[1]', position=(0,)
                    ) -> ValidationReport:
    """lmf-mrd validation plus every TEI feature LMF-MRD cannot hold."""
    position = tuple(position)
    report = validate_sema(entry, 'lmf-mrd', path, position)
    out = list(report.findings)
    if entry.gram is not None:
        out.append(Finding(INFO, 'INFO_GRAM_PLACEMENT', f'{path}/gramGrp[1]',
                           'grammatical block at entry level, not on a form',
                           position + (len(entry.forms),)))
    for node in iter_forms(entry, path, position):
        if node.depth > 1:
            out.append(Finding(WARNING, 'LOSSY_FLATTEN', node.path,
                               'nested form has no LMF counterpart', node.position))
    for node in iter_senses(entry, path, position):
        s = node.sense
        for k, u in enumerate(s.usages, 1):
            if u.usg_type != 'dom' and not u.is_other:
                out.append(Finding(WARNING, 'LOSSY_USAGE', f'{node.path}/usg[{k}]',
                                   f'"{u.usg_type}":"{u.value}"', node.position + (k - 1,)))
        for k, d in enumerate(s.definitions, 1):
            if d.inline:
                out.append(Finding(WARNING, 'LOSSY_INLINE', f'{node.path}/def[{k}]',
                                   'inline markup in definition',
                                   node.position + (len(s.usages) + k - 1,)))
    return ValidationReport(tuple(out))


def canonical_termbase(base: TermBase) -> TermBase:
    """Copy with ids dropped and every list sorted, for order-free comparison."""
    def cat_key(c):
        return (c.key, c.value, c.lang or '')

    entries = []
    for e in base.entries:
        sections = []
        for ls in e.languages:
            terms = sorted((TermSection(t.term, tuple(sorted(t.categories, key=cat_key)))
                            for t in ls.terms), key=repr)
            sections.append(LanguageSection(ls.lang, tuple(terms),
                                            tuple(sorted(ls.categories, key=cat_key))))
        sections.sort(key=lambda s: s.lang)
        entries.append(TerminologicalEntry(None, tuple(sorted(e.categories, key=cat_key)),
                                           tuple(sections)))
    entries.sort(key=repr)
    return replace(base, entries=tuple(entries), metadata=tuple(sorted(base.metadata, key=cat_key)))
