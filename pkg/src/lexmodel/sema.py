"""Word-oriented (dictionary) model: lexical entry, forms, recursive senses.

The model follows the LMF core with the machine-readable-dictionary
extension and the TEI refinements that have no LMF counterpart (recursive
forms, grouped grammatical information, typed usage markers). Text values
are kept exactly as given; nothing here normalizes or repairs data.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, Iterator, List, Literal, NamedTuple, Optional, Tuple

from .errors import ModelError
from .onoma import LangCode, nfc
from .report import ERROR, WARNING, Finding, ValidationReport

REPRESENTATION_KINDS = (
    'orthography', 'pronunciation', 'hyphenation', 'stress',
    'syllabification', 'transliteration',
)
FORM_TYPES = ('lemma', 'inflected', 'variant', 'unspecified')
USAGE_TYPES = ('dom', 'time', 'geo', 'register', 'style')
CONTEXT_TYPES = ('example', 'translation')
DEFAULT_MAX_DEPTH = 8


def _pairs(values, what) -> Tuple[Tuple[str, str], ...]:
    out = []
    for item in values:
        k, v = item
        if not isinstance(k, str) or not k or not isinstance(v, str):
            raise ModelError(f'{what}: bad pair {item!r}')
        out.append((k, v))
    return tuple(out)


@dataclass(frozen=True)
class FormRepresentation:
    kind: str
    value: str

    def __post_init__(self):
        if self.kind not in REPRESENTATION_KINDS:
            raise ModelError(f'unknown representation kind {self.kind!r}')
        if not isinstance(self.value, str):
            raise ModelError('representation value must be text')


@dataclass(frozen=True)
class GrammaticalInfo:
    pos: Optional[str] = None
    gender: Optional[str] = None
    other: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'other', _pairs(self.other, 'grammatical info'))
        if not (self.pos or self.gender or self.other):
            raise ModelError('grammatical info needs at least one populated field')

    def get(self, key: str) -> Optional[str]:
        for k, v in self.other:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class Form:
    form_type: str = 'unspecified'
    representations: Tuple[FormRepresentation, ...] = ()
    gram: Optional[GrammaticalInfo] = None
    subforms: Tuple['Form', ...] = ()

    def __post_init__(self):
        if self.form_type not in FORM_TYPES:
            raise ModelError(f'unknown form type {self.form_type!r}')
        object.__setattr__(self, 'representations', tuple(self.representations))
        object.__setattr__(self, 'subforms', tuple(self.subforms))

    def values(self, kind: str = 'orthography') -> List[str]:
        return [r.value for r in self.representations if r.kind == kind]


@dataclass(frozen=True)
class UsageMarker:
    usg_type: str
    value: str

    def __post_init__(self):
        if not isinstance(self.usg_type, str) or not isinstance(self.value, str):
            raise ModelError('usage marker type and value must be text')

    @property
    def is_other(self) -> bool:
        return self.usg_type not in USAGE_TYPES


@dataclass(frozen=True)
class Context:
    quote: str
    context_type: str = 'example'
    lang: Optional[LangCode] = None
    source: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.quote, str):
            raise ModelError('context quote must be text')
        if self.lang is not None:
            object.__setattr__(self, 'lang', LangCode(self.lang))


@dataclass(frozen=True)
class Definition:
    """Definition text plus the attributes it was found with.

    ``inline`` records that markup inside the definition was flattened on
    the way in; the writer cannot restore it.
    """
    text: str
    attrs: Tuple[Tuple[str, str], ...] = ()
    inline: bool = False

    def __post_init__(self):
        if not isinstance(self.text, str):
            raise ModelError('definition must be text')
        object.__setattr__(self, 'attrs', _pairs(self.attrs, 'definition'))

    def attr(self, key: str) -> Optional[str]:
        return dict(self.attrs).get(key)


@dataclass(frozen=True)
class Sense:
    label: Optional[str] = None
    definitions: Tuple[Definition, ...] = ()
    usages: Tuple[UsageMarker, ...] = ()
    contexts: Tuple[Context, ...] = ()
    equivalents: Tuple[Tuple[LangCode, str], ...] = ()
    subsenses: Tuple['Sense', ...] = ()
    attrs: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        defs = tuple(d if isinstance(d, Definition) else Definition(d)
                     for d in self.definitions)
        object.__setattr__(self, 'definitions', defs)
        object.__setattr__(self, 'usages', tuple(self.usages))
        object.__setattr__(self, 'contexts', tuple(self.contexts))
        eqs = []
        for lang, text in self.equivalents:
            if not isinstance(text, str):
                raise ModelError(f'equivalent text must be text: {text!r}')
            eqs.append((LangCode(lang), text))
        object.__setattr__(self, 'equivalents', tuple(eqs))
        object.__setattr__(self, 'subsenses', tuple(self.subsenses))
        object.__setattr__(self, 'attrs', _pairs(self.attrs, 'sense'))

    def attr(self, key: str) -> Optional[str]:
        return dict(self.attrs).get(key)

    @property
    def definition_texts(self) -> List[str]:
        return [d.text for d in self.definitions]


@dataclass(frozen=True)
class LexicalEntry:
    forms: Tuple[Form, ...] = ()
    gram: Optional[GrammaticalInfo] = None
    senses: Tuple[Sense, ...] = ()
    id: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'forms', tuple(self.forms))
        object.__setattr__(self, 'senses', tuple(self.senses))
        if self.id is not None and (not isinstance(self.id, str) or not self.id):
            raise ModelError(f'entry id must be non-empty text: {self.id!r}')


@dataclass(frozen=True)
class Lexicon:
    lang: LangCode = LangCode('und')
    entries: Tuple[LexicalEntry, ...] = ()
    metadata: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'lang', LangCode(self.lang))
        entries = tuple(self.entries)
        ids = [e.id for e in entries if e.id is not None]
        if len(ids) != len(set(ids)):
            raise ModelError('duplicate lexical entry id')
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'metadata', _pairs(self.metadata, 'lexicon metadata'))


def lexicon_ids(lexicon: Lexicon) -> List[str]:
    return [e.id if e.id is not None else f'entry-{i}'
            for i, e in enumerate(lexicon.entries, 1)]


# element names used in paths; they match what the TEI writer emits
def rep_element(rep: FormRepresentation) -> str:
    return {
        'orthography': 'orth', 'pronunciation': 'pron', 'hyphenation': 'hyph',
        'stress': 'stress', 'syllabification': 'syll', 'transliteration': 'orth',
    }[rep.kind]


class SenseNode(NamedTuple):
    sense: Sense
    depth: int
    path: str
    position: Tuple[int, ...]


def _sense_offset(entry: LexicalEntry) -> int:
    return len(entry.forms) + (1 if entry.gram is not None else 0)


def _subsense_offset(s: Sense) -> int:
    return len(s.usages) + len(s.definitions) + len(s.contexts) + len(s.equivalents)


def iter_senses(entry: LexicalEntry, path: str = 'entry[1]',
                position=(0,)) -> Iterator[SenseNode]:
    """Pre-order walk over every sense node with its depth (top level = 1)."""
    stack = []
    base = tuple(position) + (_sense_offset(entry),)
    for i, s in reversed(list(enumerate(entry.senses, 1))):
        stack.append((s, 1, f'{path}/sense[{i}]', base[:-1] + (base[-1] + i - 1,)))
    while stack:
        s, depth, spath, spos = stack.pop()
        yield SenseNode(s, depth, spath, spos)
        off = _subsense_offset(s)
        for i, sub in reversed(list(enumerate(s.subsenses, 1))):
            stack.append((sub, depth + 1, f'{spath}/sense[{i}]', spos + (off + i - 1,)))


class FormNode(NamedTuple):
    form: Form
    depth: int
    path: str
    position: Tuple[int, ...]


def iter_forms(entry: LexicalEntry, path: str = 'entry[1]',
               position=(0,)) -> Iterator[FormNode]:
    stack = [(f, 1, f'{path}/form[{i}]', tuple(position) + (i - 1,))
             for i, f in enumerate(entry.forms, 1)]
    stack.reverse()
    while stack:
        f, depth, fpath, fpos = stack.pop()
        yield FormNode(f, depth, fpath, fpos)
        off = len(f.representations) + (1 if f.gram is not None else 0)
        for i, sub in reversed(list(enumerate(f.subforms, 1))):
            stack.append((sub, depth + 1, f'{fpath}/form[{i}]', fpos + (off + i - 1,)))


class SenseStats(NamedTuple):
    total: int
    max_depth: int
    top_level: int


def sense_stats(entry: LexicalEntry) -> SenseStats:
    total = depth = 0
    for node in iter_senses(entry):
        total += 1
        depth = max(depth, node.depth)
    return SenseStats(total, depth, len(entry.senses))


class LemmaInfo(NamedTuple):
    text: Optional[str]
    explicit: bool


def lemma_info(entry: LexicalEntry) -> LemmaInfo:
    """Lemma text and whether it came from a form typed ``lemma``.

    Without a typed lemma carrying an orthography, the first orthography of
    the first top-level form that has one is used and ``explicit`` is False.
    """
    for form in entry.forms:
        if form.form_type == 'lemma':
            orths = form.values('orthography')
            if orths:
                return LemmaInfo(orths[0], True)
    for form in entry.forms:
        orths = form.values('orthography')
        if orths:
            return LemmaInfo(orths[0], False)
    return LemmaInfo(None, False)


def lemma_of(entry: LexicalEntry) -> Optional[str]:
    return lemma_info(entry).text


def usage_index(lexicon: Lexicon, usg_type: str) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for eid, entry in zip(lexicon_ids(lexicon), lexicon.entries):
        for node in iter_senses(entry):
            for u in node.sense.usages:
                if u.usg_type == usg_type:
                    ids = out.setdefault(u.value, [])
                    if eid not in ids:
                        ids.append(eid)
    return out


def lookup(lexicon: Lexicon, surface: str) -> List[str]:
    """Ids of entries with an orthography equal to ``surface`` (NFC)."""
    surface = nfc(surface)
    hits = []
    for eid, entry in zip(lexicon_ids(lexicon), lexicon.entries):
        if any(nfc(v) == surface
               for node in iter_forms(entry)
               for v in node.form.values('orthography')):
            hits.append(eid)
    return hits


SemaProfile = Literal['lenient', 'lmf-core', 'lmf-mrd']
SEMA_PROFILES = ('lenient', 'lmf-core', 'lmf-mrd')


def validate_sema(entry: LexicalEntry, profile: SemaProfile = 'lenient',
                  path: str = 'entry[1]', position=(0,),
                  max_depth: int = DEFAULT_MAX_DEPTH) -> ValidationReport:
    """Check an entry against one of three nested profiles.

    Each profile reports everything the previous one does:
    ``lenient`` checks structure, ``lmf-core`` adds the single-lemma rule,
    ``lmf-mrd`` adds context types and untyped usage markers.
    """
    if profile not in SEMA_PROFILES:
        raise ValueError(f'unknown profile {profile!r}')
    position = tuple(position)
    out = []
    if not entry.forms:
        out.append(Finding(ERROR, 'MISSING_FORM', path, 'entry has no form', position))
    for node in iter_forms(entry, path, position):
        if node.depth > max_depth:
            out.append(Finding(ERROR, 'DEPTH_EXCEEDED', node.path,
                               f'form depth {node.depth} > {max_depth}', node.position))
        if not node.form.representations:
            out.append(Finding(ERROR, 'MISSING_REPRESENTATION', node.path,
                               'form has no representation', node.position))
        counts: Dict[str, int] = {}
        for k, rep in enumerate(node.form.representations):
            el = rep_element(rep)
            counts[el] = counts.get(el, 0) + 1
            if not rep.value:
                out.append(Finding(ERROR, 'EMPTY_REPRESENTATION', f'{node.path}/{el}[{counts[el]}]',
                                   f'empty {rep.kind}', node.position + (k,)))
    for node in iter_senses(entry, path, position):
        s = node.sense
        if node.depth > max_depth:
            out.append(Finding(ERROR, 'DEPTH_EXCEEDED', node.path,
                               f'sense depth {node.depth} > {max_depth}', node.position))
        if not (s.definitions or s.subsenses or s.usages or s.contexts or s.equivalents):
            out.append(Finding(ERROR, 'EMPTY_SENSE', node.path, 'sense has no content',
                               node.position))
        for k, u in enumerate(s.usages, 1):
            if not u.value:
                out.append(Finding(ERROR, 'EMPTY_USAGE', f'{node.path}/usg[{k}]',
                                   'usage marker is empty', node.position + (k - 1,)))
        off = len(s.usages) + len(s.definitions)
        for k, c in enumerate(s.contexts, 1):
            if not c.quote:
                out.append(Finding(ERROR, 'EMPTY_QUOTE', f'{node.path}/cit[{k}]',
                                   'context has no quote', node.position + (off + k - 1,)))

    if profile in ('lmf-core', 'lmf-mrd'):
        lemmas = [i for i, f in enumerate(entry.forms, 1) if f.form_type == 'lemma']
        if not lemmas and entry.forms:
            out.append(Finding(WARNING, 'NO_EXPLICIT_LEMMA', f'{path}/form[1]',
                               'no form typed lemma; first form used', position + (0,)))
        for i in lemmas[1:]:
            out.append(Finding(ERROR, 'MULTIPLE_LEMMA', f'{path}/form[{i}]',
                               'second form typed lemma', position + (i - 1,)))

    if profile == 'lmf-mrd':
        for node in iter_senses(entry, path, position):
            s = node.sense
            for k, u in enumerate(s.usages, 1):
                if u.is_other:
                    out.append(Finding(WARNING, 'LOSSY_USAGE', f'{node.path}/usg[{k}]',
                                       f'usage type {u.usg_type!r}: {u.value}',
                                       node.position + (k - 1,)))
            off = len(s.usages) + len(s.definitions)
            for k, c in enumerate(s.contexts, 1):
                if c.context_type not in CONTEXT_TYPES:
                    out.append(Finding(ERROR, 'BAD_CONTEXT_TYPE', f'{node.path}/cit[{k}]',
                                       f'context type {c.context_type!r}',
                                       node.position + (off + k - 1,)))
    return ValidationReport(tuple(out))


def flatten_forms(entry: LexicalEntry, path: str = 'entry[1]'):
    """Strict LMF-core view: nested forms become sibling ``variant`` forms.

    Returns the rebuilt entry and a report with one LOSSY_FLATTEN warning per
    moved subform.
    """
    flat, findings = [], []
    for node in iter_forms(entry, path):
        f = node.form
        if node.depth == 1:
            flat.append(replace(f, subforms=()))
        else:
            flat.append(replace(f, form_type='variant', subforms=()))
            findings.append(Finding(WARNING, 'LOSSY_FLATTEN', node.path,
                                    'nested form moved to top level as variant',
                                    node.position))
    return replace(entry, forms=tuple(flat)), ValidationReport(tuple(findings))
