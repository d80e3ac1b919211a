"""TBX-style termbase reader and canonical writer.

Element mapping::

    termEntry        -> TerminologicalEntry (xml:id -> id)
    langSet/langSec  -> LanguageSection (xml:lang required)
    tig              -> TermSection, its <term> giving the term text
    descrip/admin    -> DataCategory at the level where they appear
    termNote         -> DataCategory on the enclosing TermSection
    descripGrp/adminGrp are transparent

Any root element is accepted as a container; a bare ``termEntry`` root is a
one-entry base. ``descrip``/``admin`` children of the root are base metadata.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import List, NamedTuple, Optional

from . import _xml
from ._xml import XML_ID, XML_LANG, children, local
from .errors import InvalidModel, ModelError
from .onoma import (
    DataCategory, LangCode, LanguageSection, TermBase, TerminologicalEntry,
    TermSection, validate_onoma, validate_termbase,
)
from .parsing import STRICT, Collector, ParseOptions, check_namespace
from .report import ERROR, INFO, WARNING, ValidationReport

# Unknown elements kept in lenient mode: key of the category, raw XML as value.
EXTENSION_KEY = 'x-extension'

CATEGORY_ELEMENTS = ('descrip', 'admin', 'termNote')
GROUP_ELEMENTS = ('descripGrp', 'adminGrp')
CONTAINERS = ('text', 'body', 'front', 'back')
ADMIN_KEYS = frozenset({
    'conceptIdentifier', 'conceptOrigin', 'termIdentifier', 'source',
    'responsibility', 'creationDate', 'modificationDate',
})
DESCRIP_KEYS = frozenset({'subjectField', 'definition', 'originatingDatabaseName', 'example'})


class ParseOutcome(NamedTuple):
    base: TermBase
    report: ValidationReport


class _Reader:
    def __init__(self, doc: _xml.XmlDocument, opts: ParseOptions):
        self.doc = doc
        self.opts = opts
        self.out = Collector(opts)

    def unknown(self, elem, path, pos, where: str) -> Optional[DataCategory]:
        name = local(elem.tag)
        self.out.add(ERROR if self.opts.strict else WARNING, 'UNKNOWN_ELEMENT', path,
                     f'<{name}> not allowed in {where}', pos)
        return DataCategory(EXTENSION_KEY, self.doc.raw(elem))

    def text_of(self, elem, path, pos) -> str:
        if _xml.has_element_children(elem):
            self.out.add(ERROR if self.opts.strict else WARNING, 'INLINE_MARKUP', path,
                         f'markup inside <{local(elem.tag)}> flattened', pos)
            return _xml.flat_text(elem)
        return elem.text or ''

    def category(self, elem, path, pos) -> Optional[DataCategory]:
        key = elem.get('type')
        if not key:
            self.out.add(ERROR, 'INVALID_VALUE', path,
                         f'<{local(elem.tag)}> without type attribute', pos)
            return None
        value = self.text_of(elem, path, pos)
        if not value:
            self.out.add(ERROR, 'EMPTY_VALUE', path, f'{key} has no value', pos)
            return None
        try:
            cat = DataCategory(key, value, elem.get(XML_LANG))
        except ModelError as exc:
            self.out.add(ERROR, 'INVALID_VALUE', path, str(exc), pos)
            return None
        if key in ('term', 'language'):
            self.out.add(ERROR, 'INVALID_VALUE', path,
                         f'{key!r} is structural and cannot be a descriptor', pos)
            return None
        return cat

    def categories_into(self, elem, path, pos, cats: list, level: str, allow_note: bool):
        """Handle one child that may carry categories; False if it is not one."""
        name = local(elem.tag)
        if name in ('descrip', 'admin') or (name == 'termNote' and allow_note):
            cat = self.category(elem, path, pos)
            if cat is not None:
                cats.append(cat)
            return True
        if name in GROUP_ELEMENTS:
            for child, cpath, cpos in children(elem, path, pos):
                if not self.categories_into(child, cpath, cpos, cats, level, allow_note):
                    cats.append(self.unknown(child, cpath, cpos, f'{name} ({level})'))
            return True
        return False

    def read(self) -> ParseOutcome:
        root = self.doc.root
        root_path = f'{local(root.tag) or "node"}[1]'
        check_namespace(root, root_path, self.opts, self.out)
        found = []
        metadata = []
        if local(root.tag) == 'termEntry':
            found.append((root, root_path, (0,)))
        else:
            self.walk(root, root_path, (0,), found, metadata, top=True)
        entries = []
        seen_ids = set()
        for elem, path, pos in found:
            entry = self.entry(elem, path, pos)
            if entry.id is not None:
                if entry.id in seen_ids:
                    self.out.add(ERROR, 'DUPLICATE_ID', path, f'id {entry.id!r} reused', pos)
                    entry = TerminologicalEntry(None, entry.categories, entry.languages)
                seen_ids.add(entry.id)
            entries.append(entry)
        return ParseOutcome(TermBase(tuple(entries), tuple(metadata)), self.out.report())

    def walk(self, elem, path, pos, found, metadata, top):
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            if name == 'termEntry':
                found.append((child, cpath, cpos))
            elif name in CONTAINERS:
                self.walk(child, cpath, cpos, found, metadata, top=False)
            elif name == 'martifHeader':
                continue
            elif top and self.categories_into(child, cpath, cpos, metadata, 'base',
                                              allow_note=False):
                continue
            else:
                self.unknown(child, cpath, cpos, 'document body')

    def entry(self, elem, path, pos) -> TerminologicalEntry:
        cats, sections, order = [], {}, []
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            if self.categories_into(child, cpath, cpos, cats, 'termEntry', allow_note=False):
                continue
            if name in ('langSet', 'langSec'):
                if name == 'langSec' and not self.opts.strict:
                    self.out.add(INFO, 'LANGSEC_ALIAS', cpath, 'langSec read as langSet', cpos)
                section = self.lang_section(child, cpath, cpos)
                if section is None:
                    continue
                if section.lang in sections:
                    self.out.add(ERROR if self.opts.strict else WARNING, 'DUPLICATE_LANG',
                                 cpath, f'second section for {section.lang} merged', cpos)
                    prev = sections[section.lang]
                    section = LanguageSection(prev.lang, prev.terms + section.terms,
                                              prev.categories + section.categories)
                else:
                    order.append(section.lang)
                sections[section.lang] = section
            else:
                cats.append(self.unknown(child, cpath, cpos, 'termEntry'))
        ident = elem.get(XML_ID) or elem.get('id') or None
        entry = TerminologicalEntry(ident, tuple(cats), tuple(sections[k] for k in order))
        # structural findings the element loop cannot see (no langSet, no tig)
        for f in validate_onoma(entry, 'minimal', path, pos):
            if f.code in ('MISSING_LANG_SECTION', 'MISSING_TERM_SECTION'):
                self.out.add(f.severity, f.code, f.path, f.message, f.position)
        return entry

    def lang_section(self, elem, path, pos) -> Optional[LanguageSection]:
        raw_lang = elem.get(XML_LANG) or elem.get('lang')
        if not raw_lang:
            self.out.add(ERROR, 'MISSING_LANG', path, 'language section without xml:lang', pos)
            return None
        try:
            lang = LangCode(raw_lang)
        except ModelError as exc:
            self.out.add(ERROR, 'INVALID_VALUE', path, str(exc), pos)
            return None
        cats, terms = [], []
        for child, cpath, cpos in children(elem, path, pos):
            if self.categories_into(child, cpath, cpos, cats, 'langSet', allow_note=False):
                continue
            if local(child.tag) == 'tig':
                ts = self.term_section(child, cpath, cpos)
                if ts is not None:
                    terms.append(ts)
            else:
                cats.append(self.unknown(child, cpath, cpos, 'langSet'))
        return LanguageSection(lang, tuple(terms), tuple(cats))

    def term_section(self, elem, path, pos) -> Optional[TermSection]:
        term = None
        cats = []
        for child, cpath, cpos in children(elem, path, pos):
            if local(child.tag) == 'term':
                if term is not None:
                    self.out.add(ERROR, 'DUPLICATE_TERM', cpath, 'extra <term> ignored', cpos)
                    continue
                term = self.text_of(child, cpath, cpos)
            elif not self.categories_into(child, cpath, cpos, cats, 'tig', allow_note=True):
                cats.append(self.unknown(child, cpath, cpos, 'tig'))
        if term is None or not term.strip():
            self.out.add(ERROR, 'EMPTY_TERM', path, 'term section without term text', pos)
            return None
        return TermSection(term, tuple(cats))


def parse_tbx(document, opts: ParseOptions = STRICT) -> ParseOutcome:
    """Read a TBX-style document.

    In strict mode the first error raises the matching ParseError
    subclass. In lenient mode recoverable problems become findings in the
    returned report; only MalformedXml is raised.
    """
    doc = _xml.parse_document(document)
    return _Reader(doc, opts).read()


def _element_for(key: str, level: str) -> str:
    if key in ADMIN_KEYS:
        return 'admin'
    if level == 'term' and key not in DESCRIP_KEYS:
        return 'termNote'
    return 'descrip'


def _write_categories(parent, cats, level, opaque: List[str]):
    for cat in cats:
        if cat.key == EXTENSION_KEY:
            _xml.placeholder(parent, len(opaque))
            opaque.append(cat.value)
            continue
        attrib = {}
        if cat.lang is not None:
            attrib[XML_LANG] = str(cat.lang)
        attrib['type'] = cat.key
        el = ET.SubElement(parent, _element_for(cat.key, level), attrib)
        el.text = cat.value


def write_tbx(base: TermBase) -> bytes:
    """Serialize a base in canonical form.

    Raises InvalidModel unless every entry passes the minimal profile.
    """
    report = validate_termbase(base, 'minimal')
    if report.errors:
        raise InvalidModel('term base fails the minimal profile:\n' + report.to_text(), report)
    opaque: List[str] = []
    root = ET.Element('martif')
    _write_categories(root, base.metadata, 'base', opaque)
    body = ET.SubElement(ET.SubElement(root, 'text'), 'body')
    for entry in base.entries:
        attrib = {XML_ID: entry.id} if entry.id is not None else {}
        te = ET.SubElement(body, 'termEntry', attrib)
        _write_categories(te, entry.categories, 'entry', opaque)
        for ls in entry.languages:
            lse = ET.SubElement(te, 'langSet', {XML_LANG: str(ls.lang)})
            _write_categories(lse, ls.categories, 'lang', opaque)
            for ts in ls.terms:
                tig = ET.SubElement(lse, 'tig')
                ET.SubElement(tig, 'term').text = ts.term
                _write_categories(tig, ts.categories, 'term', opaque)
    return _xml.serialize(root, opaque)
