"""TEI dictionary-entry reader and canonical writer.

``entry`` elements become :class:`~lexmodel.sema.LexicalEntry` values;
``entryFree`` elements are kept as raw text and written back verbatim at
their original position. Any surrounding TEI skeleton is walked through and
otherwise ignored, except ``teiHeader`` which is skipped with a note.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import _xml
from ._xml import XML_ID, XML_LANG, attr_name, children, clark_name, local
from .errors import InvalidModel, ModelError
from .onoma import LangCode
from .parsing import STRICT, Collector, ParseOptions, check_namespace
from .report import ERROR, INFO, WARNING, ValidationReport, merge
from .sema import (
    Context, Definition, Form, FormRepresentation, GrammaticalInfo,
    LexicalEntry, Lexicon, Sense, UsageMarker, validate_sema,
)

REPRESENTATION_ELEMENTS = {
    'orth': 'orthography',
    'pron': 'pronunciation',
    'phon': 'pronunciation',
    'hyph': 'hyphenation',
    'stress': 'stress',
    'syll': 'syllabification',
}
# TEI gramGrp children written as elements; other keys use <gram type="...">
GRAM_ELEMENTS = frozenset({'number', 'case', 'per', 'tns', 'mood', 'iType', 'subc', 'colloc'})
TEI_FORM_TYPES = {'lemma': 'lemma', 'inflected': 'inflected', 'variant': 'variant'}


@dataclass(frozen=True)
class TeiDocument:
    lexicon: Lexicon = Lexicon()
    opaque_entries: Tuple[Tuple[int, str], ...] = ()

    def __post_init__(self):
        opaque = tuple((int(p), str(raw)) for p, raw in self.opaque_entries)
        positions = [p for p, _ in opaque]
        if any(b <= a for a, b in zip(positions, positions[1:])) or any(p < 0 for p in positions):
            raise ModelError('opaque entry positions must be strictly increasing')
        object.__setattr__(self, 'opaque_entries', opaque)


class _Reader:
    def __init__(self, doc: _xml.XmlDocument, opts: ParseOptions):
        self.doc = doc
        self.opts = opts
        self.out = Collector(opts)
        self.entries: List[LexicalEntry] = []
        self.opaque: List[Tuple[int, str]] = []
        self.lang: Optional[str] = None

    def severe(self):
        return ERROR if self.opts.strict else WARNING

    def unknown(self, elem, path, pos, where):
        self.out.add(self.severe(), 'UNKNOWN_ELEMENT', path,
                     f'<{local(elem.tag)}> not supported in {where}; dropped', pos)

    def text_of(self, elem, path, pos) -> Tuple[str, bool]:
        if _xml.has_element_children(elem):
            self.out.add(self.severe(), 'INLINE_MARKUP', path,
                         f'markup inside <{local(elem.tag)}> flattened to text', pos)
            return _xml.flat_text(elem), True
        return elem.text or '', False

    # document level

    def read(self):
        root = self.doc.root
        root_path = f'{local(root.tag) or "node"}[1]'
        check_namespace(root, root_path, self.opts, self.out)
        self.visit(root, root_path, (0,), None)
        lang = self.opts.lang or self.lang
        if lang is None:
            self.out.add(INFO, 'LANG_UNDETERMINED', root_path,
                         'no object language given; using und', (0,))
            lang = 'und'
        try:
            lang = LangCode(lang)
        except ModelError as exc:
            self.out.add(ERROR, 'INVALID_VALUE', root_path, str(exc), (0,))
            lang = LangCode('und')
        entries = []
        seen = set()
        for e in self.entries:
            if e.id is not None and e.id in seen:
                self.out.add(ERROR, 'DUPLICATE_ID', root_path, f'id {e.id!r} reused', (0,))
                e = LexicalEntry(e.forms, e.gram, e.senses, None)
            seen.add(e.id)
            entries.append(e)
        doc = TeiDocument(Lexicon(lang, tuple(entries)), tuple(self.opaque))
        return doc, self.out.report()

    def visit(self, elem, path, pos, inherited_lang):
        name = local(elem.tag)
        lang = elem.get(XML_LANG) or inherited_lang
        if name == 'entry':
            if self.lang is None and lang:
                self.lang = lang
            entry = self.entry(elem, path, pos)
            if entry is not None:
                self.entries.append(entry)
            return
        if name == 'entryFree':
            self.opaque.append((len(self.entries) + len(self.opaque), self.doc.raw(elem)))
            return
        if name == 'teiHeader':
            self.out.add(INFO, 'TEI_HEADER_SKIPPED', path, 'teiHeader not modelled', pos)
            return
        for child, cpath, cpos in children(elem, path, pos):
            self.visit(child, cpath, cpos, lang)

    # entry level

    def entry(self, elem, path, pos) -> Optional[LexicalEntry]:
        forms, senses = [], []
        gram = None
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            if name == 'form':
                form = self.form(child, cpath, cpos, 1)
                if form is not None:
                    forms.append(form)
            elif name == 'gramGrp':
                gram = self.merge_gram(gram, self.gram_grp(child, cpath, cpos), cpath, cpos)
            elif name == 'sense':
                sense = self.sense(child, cpath, cpos, 1)
                if sense is not None:
                    senses.append(sense)
            else:
                self.unknown(child, cpath, cpos, 'entry')
        ident = elem.get(XML_ID) or None
        entry = LexicalEntry(tuple(forms), gram, tuple(senses), ident)
        structural = validate_sema(entry, 'lenient', path, pos, self.opts.max_depth)
        for f in structural:
            self.out.add(f.severity, f.code, f.path, f.message, f.position)
        return entry

    def merge_gram(self, prev, new, path, pos):
        if new is None:
            return prev
        if prev is None:
            return new
        self.out.add(self.severe(), 'DUPLICATE_GRAM', path, 'second gramGrp merged', pos)
        return GrammaticalInfo(prev.pos or new.pos, prev.gender or new.gender,
                               prev.other + new.other)

    def gram_grp(self, elem, path, pos) -> Optional[GrammaticalInfo]:
        pos_value = gender = None
        other = []
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            value, _ = self.text_of(child, cpath, cpos)
            if name == 'gram':
                name = child.get('type') or 'gram'
            if name == 'pos' and pos_value is None:
                pos_value = value
            elif name in ('gen', 'gender') and gender is None:
                gender = value
            else:
                other.append((name, value))
        if not (pos_value or gender or other):
            self.out.add(ERROR, 'EMPTY_GRAM', path, 'gramGrp without content', pos)
            return None
        return GrammaticalInfo(pos_value or None, gender or None, tuple(other))

    def form(self, elem, path, pos, depth) -> Optional[Form]:
        if depth > self.opts.max_depth:
            self.out.add(ERROR, 'DEPTH_EXCEEDED', path,
                         f'form nested deeper than {self.opts.max_depth}; dropped', pos)
            return None
        raw_type = elem.get('type')
        form_type = 'unspecified'
        if raw_type is not None:
            form_type = TEI_FORM_TYPES.get(raw_type, 'unspecified')
            if raw_type not in TEI_FORM_TYPES:
                self.out.add(WARNING, 'UNKNOWN_FORM_TYPE', path,
                             f'form type {raw_type!r} read as unspecified', pos)
        reps, subforms = [], []
        gram = None
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            if name in REPRESENTATION_ELEMENTS:
                kind = REPRESENTATION_ELEMENTS[name]
                if name == 'orth' and child.get('type') == 'transliteration':
                    kind = 'transliteration'
                value, _ = self.text_of(child, cpath, cpos)
                reps.append(FormRepresentation(kind, value))
            elif name == 'gramGrp':
                gram = self.merge_gram(gram, self.gram_grp(child, cpath, cpos), cpath, cpos)
            elif name == 'form':
                sub = self.form(child, cpath, cpos, depth + 1)
                if sub is not None:
                    subforms.append(sub)
            else:
                self.unknown(child, cpath, cpos, 'form')
        return Form(form_type, tuple(reps), gram, tuple(subforms))

    def sense(self, elem, path, pos, depth) -> Optional[Sense]:
        if depth > self.opts.max_depth:
            self.out.add(ERROR, 'DEPTH_EXCEEDED', path,
                         f'sense nested deeper than {self.opts.max_depth}; dropped', pos)
            return None
        label = elem.get('n')
        attrs = tuple((attr_name(k), v) for k, v in elem.attrib.items() if k != 'n')
        defs, usages, contexts, equivalents, subsenses = [], [], [], [], []
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            if name == 'def':
                text, inline = self.text_of(child, cpath, cpos)
                defs.append(Definition(
                    text, tuple((attr_name(k), v) for k, v in child.attrib.items()), inline))
            elif name == 'usg':
                value, _ = self.text_of(child, cpath, cpos)
                usages.append(UsageMarker(child.get('type', ''), value))
            elif name == 'cit':
                self.cit(child, cpath, cpos, contexts, equivalents)
            elif name == 'sense':
                sub = self.sense(child, cpath, cpos, depth + 1)
                if sub is not None:
                    subsenses.append(sub)
            else:
                self.unknown(child, cpath, cpos, 'sense')
        try:
            return Sense(label, tuple(defs), tuple(usages), tuple(contexts),
                         tuple(equivalents), tuple(subsenses), attrs)
        except ModelError as exc:
            self.out.add(ERROR, 'INVALID_VALUE', path, str(exc), pos)
            return None

    def cit(self, elem, path, pos, contexts, equivalents):
        quote = source = None
        quote_lang = None
        for child, cpath, cpos in children(elem, path, pos):
            name = local(child.tag)
            if name == 'quote' and quote is None:
                quote, _ = self.text_of(child, cpath, cpos)
                quote_lang = child.get(XML_LANG)
            elif name == 'bibl' and source is None:
                source, _ = self.text_of(child, cpath, cpos)
            else:
                self.unknown(child, cpath, cpos, 'cit')
        if quote is None:
            self.out.add(ERROR, 'CIT_WITHOUT_QUOTE', path, 'cit without quote; dropped', pos)
            return
        ctype = elem.get('type', '')
        raw_lang = elem.get(XML_LANG) or quote_lang
        try:
            lang = LangCode(raw_lang) if raw_lang else None
        except ModelError as exc:
            self.out.add(ERROR, 'INVALID_VALUE', path, str(exc), pos)
            lang = None
        if ctype == 'translation' and lang is not None and source is None:
            equivalents.append((lang, quote))
        else:
            contexts.append(Context(quote, ctype, lang, source))


def parse_tei(document, opts: ParseOptions = STRICT) -> Tuple[TeiDocument, ValidationReport]:
    """Read TEI dictionary entries.

    A ``cit type="translation"`` with a language and no ``bibl`` becomes a
    sense equivalent; every other ``cit`` becomes a Context.
    """
    doc = _xml.parse_document(document)
    return _Reader(doc, opts).read()


def _attrib(pairs) -> dict:
    """Attributes in canonical order: n, type, xml:lang, then the rest."""
    pairs = list(pairs)
    rank = {'n': 0, 'type': 1, 'xml:lang': 2}
    pairs.sort(key=lambda kv: rank.get(kv[0], 3))
    return {clark_name(k): v for k, v in pairs}


def _write_gram(parent, gram: GrammaticalInfo):
    gg = ET.SubElement(parent, 'gramGrp')
    if gram.pos is not None:
        ET.SubElement(gg, 'pos').text = gram.pos
    if gram.gender is not None:
        ET.SubElement(gg, 'gen').text = gram.gender
    for key, value in gram.other:
        if key in GRAM_ELEMENTS:
            ET.SubElement(gg, key).text = value
        else:
            ET.SubElement(gg, 'gram', {'type': key}).text = value


def _write_form(parent, form: Form):
    attrib = {} if form.form_type == 'unspecified' else {'type': form.form_type}
    fe = ET.SubElement(parent, 'form', attrib)
    for rep in form.representations:
        if rep.kind == 'transliteration':
            ET.SubElement(fe, 'orth', {'type': 'transliteration'}).text = rep.value
        else:
            name = {'orthography': 'orth', 'pronunciation': 'pron', 'hyphenation': 'hyph',
                    'stress': 'stress', 'syllabification': 'syll'}[rep.kind]
            ET.SubElement(fe, name).text = rep.value
    if form.gram is not None:
        _write_gram(fe, form.gram)
    for sub in form.subforms:
        _write_form(fe, sub)


def _write_sense(parent, sense: Sense):
    pairs = ([('n', sense.label)] if sense.label is not None else []) + list(sense.attrs)
    se = ET.SubElement(parent, 'sense', _attrib(pairs))
    for u in sense.usages:
        ET.SubElement(se, 'usg', {'type': u.usg_type} if u.usg_type else {}).text = u.value
    for d in sense.definitions:
        ET.SubElement(se, 'def', _attrib(d.attrs)).text = d.text
    for c in sense.contexts:
        pairs = ([('type', c.context_type)] if c.context_type else [])
        if c.lang is not None:
            pairs.append(('xml:lang', str(c.lang)))
        ce = ET.SubElement(se, 'cit', _attrib(pairs))
        ET.SubElement(ce, 'quote').text = c.quote
        if c.source is not None:
            ET.SubElement(ce, 'bibl').text = c.source
    for lang, text in sense.equivalents:
        ce = ET.SubElement(se, 'cit', _attrib([('type', 'translation'), ('xml:lang', str(lang))]))
        ET.SubElement(ce, 'quote').text = text
    for sub in sense.subsenses:
        _write_sense(se, sub)


def _write_entry(parent, entry: LexicalEntry):
    ee = ET.SubElement(parent, 'entry', {XML_ID: entry.id} if entry.id is not None else {})
    for form in entry.forms:
        _write_form(ee, form)
    if entry.gram is not None:
        _write_gram(ee, entry.gram)
    for sense in entry.senses:
        _write_sense(ee, sense)


def write_tei(doc: TeiDocument, wrap: bool = False) -> bytes:
    """Serialize entries under a ``body`` root, or a minimal TEI document.

    Raises InvalidModel unless every entry passes the lenient profile.
    """
    lexicon = doc.lexicon
    report = merge(validate_sema(e, 'lenient', f'entry[{i}]', (i - 1,))
                   for i, e in enumerate(lexicon.entries, 1))
    if report.errors:
        raise InvalidModel('lexicon fails the lenient profile:\n' + report.to_text(), report)
    lang_attr = {} if lexicon.lang == 'und' else {XML_LANG: str(lexicon.lang)}
    if wrap:
        root = ET.Element('TEI', {'xmlns': 'http://www.tei-c.org/ns/1.0'})
        header = ET.SubElement(root, 'teiHeader')
        fdesc = ET.SubElement(header, 'fileDesc')
        ET.SubElement(ET.SubElement(fdesc, 'titleStmt'), 'title').text = 'Dictionary'
        ET.SubElement(ET.SubElement(fdesc, 'publicationStmt'), 'p').text = 'Unpublished'
        ET.SubElement(ET.SubElement(fdesc, 'sourceDesc'), 'p').text = 'Born digital'
        body = ET.SubElement(ET.SubElement(root, 'text', lang_attr), 'body')
    else:
        root = body = ET.Element('body', lang_attr)
    pending = list(doc.opaque_entries)
    raws: List[str] = []
    index = 0
    for entry in lexicon.entries:
        while pending and pending[0][0] <= index:
            _xml.placeholder(body, len(raws))
            raws.append(pending.pop(0)[1])
            index += 1
        _write_entry(body, entry)
        index += 1
    for _, raw in pending:
        _xml.placeholder(body, len(raws))
        raws.append(raw)
    return _xml.serialize(root, raws)
