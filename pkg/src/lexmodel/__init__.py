"""Onomasiological (termbase) and semasiological (dictionary) lexical models.

TBX-style and TEI-style readers and writers, validation profiles, and the
crosswalk between the two organizations.
"""

from .crosswalk import (
    ProjectionOptions, canonical_termbase, lmf_conformance, onoma_projection, sema_projection,
)
from .errors import (
    CitWithoutQuote, DuplicateObjectLanguage, EmptyTerm, InvalidModel, LexModelError,
    MalformedXml, MissingLang, ModelError, ParseError, SameLanguage, UnknownElement,
)
from .jsonform import JsonFormError
from .onoma import (
    DataCategory, LangCode, LanguageSection, TermBase, TerminologicalEntry, TermSection,
    accidental_polysemy, equivalents, index_by_term, synonyms, validate_onoma,
    validate_termbase,
)
from .parsing import LENIENT, STRICT, ParseOptions
from .report import (
    CODES, ERROR, INFO, WARNING, Finding, LossReport, Severity, ValidationReport, merge,
    worst_severity,
)
from .sema import (
    Context, Definition, Form, FormRepresentation, GrammaticalInfo, LexicalEntry, Lexicon,
    Sense, UsageMarker, flatten_forms, iter_senses, lemma_info, lemma_of, lookup,
    sense_stats, usage_index, validate_sema,
)
from .tbx import parse_tbx, write_tbx
from .tei import TeiDocument, parse_tei, write_tei

__version__ = '0.1.0'

__all__ = [
    'accidental_polysemy', 'canonical_termbase', 'CitWithoutQuote', 'CODES', 'Context',
    'DataCategory', 'Definition', 'DuplicateObjectLanguage', 'EmptyTerm', 'equivalents',
    'ERROR', 'Finding', 'flatten_forms', 'Form', 'FormRepresentation', 'GrammaticalInfo',
    'index_by_term', 'INFO', 'InvalidModel', 'iter_senses', 'LangCode', 'LanguageSection',
    'lemma_info', 'lemma_of', 'LexicalEntry', 'Lexicon', 'LexModelError', 'lmf_conformance',
    'lookup', 'LossReport', 'MalformedXml', 'merge', 'MissingLang', 'ModelError',
    'onoma_projection', 'ParseError', 'ProjectionOptions', 'SameLanguage', 'sema_projection',
    'Sense', 'sense_stats', 'Severity', 'synonyms', 'TermBase', 'TerminologicalEntry',
    'TermSection', 'UnknownElement', 'usage_index', 'UsageMarker', 'validate_onoma',
    'validate_sema', 'validate_termbase', 'ValidationReport', 'WARNING', 'worst_severity',
    'JsonFormError', 'LENIENT', 'ParseOptions', 'STRICT', 'TeiDocument',
    'parse_tbx', 'parse_tei', 'write_tbx', 'write_tei',
]
