"""Diagnostics shared by every reader, validator and projection.

A :class:`ValidationReport` is an immutable, ordered collection of
:class:`Finding` values. Findings are data: nothing in this module raises on
a bad document or terminates the process.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple


class Severity(enum.IntEnum):
    INFO = 0
    WARNING = 1
    ERROR = 2

    def __str__(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value: "str | Severity") -> "Severity":
        if isinstance(value, Severity):
            return value
        try:
            return cls[value.upper()]
        except KeyError:
            raise ValueError(f'unknown severity: {value!r}') from None


INFO = Severity.INFO
WARNING = Severity.WARNING
ERROR = Severity.ERROR


# Every code a finding may carry. Keep in sync with README.
CODES = {
    # document level
    'MALFORMED_XML': 'input is not well-formed XML',
    'NAMESPACE_MISMATCH': 'element is not in the required namespace',
    'UNKNOWN_ELEMENT': 'element not part of the supported inventory',
    'INLINE_MARKUP': 'inline markup flattened to text',
    'DEPTH_EXCEEDED': 'recursion deeper than the configured limit',
    'INVALID_VALUE': 'attribute or text value rejected by the model',
    'EMPTY_VALUE': 'descriptor element without text',
    'DUPLICATE_ID': 'identifier used by more than one entry',
    # onomasiological
    'MISSING_LANG': 'language section without a language',
    'MISSING_LANG_SECTION': 'entry without a language section',
    'MISSING_TERM_SECTION': 'language section without a term section',
    'EMPTY_TERM': 'term section without term text',
    'DUPLICATE_TERM': 'term section with more than one term',
    'DUPLICATE_LANG': 'two language sections for one language',
    'LANGSEC_ALIAS': 'langSec element read as langSet',
    'MISSING_SUBJECT_FIELD': 'no subjectField at concept level',
    'MISSING_DEFINITION': 'no definition at concept or language level',
    'MISSING_PART_OF_SPEECH': 'term section without partOfSpeech',
    # semasiological
    'MISSING_FORM': 'lexical entry without a form',
    'MISSING_REPRESENTATION': 'form without a representation',
    'EMPTY_REPRESENTATION': 'form representation without text',
    'EMPTY_GRAM': 'grammatical block without content',
    'DUPLICATE_GRAM': 'more than one grammatical block at one level',
    'EMPTY_SENSE': 'sense without definition, usage, context, equivalent or subsense',
    'EMPTY_USAGE': 'usage marker without text',
    'EMPTY_QUOTE': 'context without quote text',
    'UNKNOWN_FORM_TYPE': 'form type outside lemma/inflected/variant',
    'NO_EXPLICIT_LEMMA': 'no form typed as lemma',
    'MULTIPLE_LEMMA': 'more than one form typed as lemma',
    'BAD_CONTEXT_TYPE': 'context type outside example/translation',
    'CIT_WITHOUT_QUOTE': 'cit element without quote',
    'LANG_UNDETERMINED': 'object language not given, using und',
    'TEI_HEADER_SKIPPED': 'teiHeader ignored',
    # crosswalk
    'LOSSY_USAGE': 'usage marker with no LMF/TMF home',
    'LOSSY_FLATTEN': 'nested form flattened into sibling variants',
    'LOSSY_INLINE': 'inline definition markup lost',
    'LOSSY_CATEGORY': 'data category with no target in the projection',
    'LOSSY_FORM': 'form or representation with no target in the projection',
    'LOSSY_CONTEXT': 'context with no target in the projection',
    'INFO_GRAM_PLACEMENT': 'grammatical block at entry level',
    'NO_DEFINITION': 'sense without definition or equivalent not projected',
    'PRECONDITION': 'input does not meet the operation precondition',
}

_STEP = re.compile(r'([A-Za-z_][\w.:-]*)\[([1-9]\d*)\]')


def parse_path(path: str) -> Tuple[Tuple[str, int], ...]:
    """Split ``'a[1]/b[2]'`` into ``(('a', 1), ('b', 2))``.

    Raises ValueError when a step is not of the form ``name[index]``.
    """
    steps = []
    for part in path.split('/'):
        m = _STEP.fullmatch(part)
        if m is None:
            raise ValueError(f'malformed path step {part!r} in {path!r}')
        steps.append((m.group(1), int(m.group(2))))
    return tuple(steps)


@dataclass(frozen=True)
class Finding:
    """One diagnostic.

    ``position`` is the chain of 0-based child offsets of the flagged
    location and drives document ordering. When omitted it is derived from
    the path indices, which is exact whenever siblings share a name.
    """
    severity: Severity
    code: str
    path: str
    message: str = ''
    position: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'severity', Severity.parse(self.severity))
        if self.code not in CODES:
            raise ValueError(f'unregistered finding code: {self.code!r}')
        steps = parse_path(self.path)
        if not self.position:
            object.__setattr__(
                self, 'position', tuple(i - 1 for _, i in steps))
        else:
            object.__setattr__(self, 'position', tuple(self.position))

    def sort_key(self):
        return (self.position, self.code)

    def to_line(self) -> str:
        message = self.message.replace('\t', ' ').replace('\n', ' ')
        return f'{self.severity}\t{self.code}\t{self.path}\t{message}'

    def to_dict(self) -> dict:
        return {
            'severity': str(self.severity),
            'code': self.code,
            'path': self.path,
            'message': self.message,
        }


@dataclass(frozen=True)
class ValidationReport:
    findings: Tuple[Finding, ...] = ()

    def __post_init__(self):
        ordered = sorted(self.findings, key=Finding.sort_key)
        object.__setattr__(self, 'findings', tuple(ordered))

    def __len__(self):
        return len(self.findings)

    def __iter__(self):
        return iter(self.findings)

    def __bool__(self):
        return bool(self.findings)

    @property
    def codes(self) -> Tuple[str, ...]:
        return tuple(f.code for f in self.findings)

    def by_severity(self, severity) -> Tuple[Finding, ...]:
        severity = Severity.parse(severity)
        return tuple(f for f in self.findings if f.severity == severity)

    @property
    def errors(self):
        return self.by_severity(ERROR)

    @property
    def warnings(self):
        return self.by_severity(WARNING)

    def to_text(self) -> str:
        return ''.join(f.to_line() + '\n' for f in self.findings)

    def to_json(self) -> str:
        return json.dumps([f.to_dict() for f in self.findings],
                          ensure_ascii=False)

    @classmethod
    def from_lines(cls, text: str) -> 'ValidationReport':
        findings = []
        for line in text.splitlines():
            if not line:
                continue
            severity, code, path, message = line.split('\t', 3)
            findings.append(Finding(severity, code, path, message))
        return cls(tuple(findings))


LossReport = ValidationReport

EMPTY = ValidationReport()


def merge(reports: Iterable[ValidationReport]) -> ValidationReport:
    """Concatenate reports and restore the document-order invariant.

    The sort is stable, so merging is associative and the empty report is
    an identity.
    """
    findings = []
    for report in reports:
        findings.extend(report.findings)
    return ValidationReport(tuple(findings))


def worst_severity(report: ValidationReport) -> Optional[Severity]:
    if not report.findings:
        return None
    return max(f.severity for f in report.findings)
