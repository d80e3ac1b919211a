"""Options and finding collection shared by the document readers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from ._xml import children, local, namespace
from .errors import error_for
from .report import ERROR, Finding, Severity, ValidationReport
from .sema import DEFAULT_MAX_DEPTH


@dataclass(frozen=True)
class ParseOptions:
    """Reader configuration.

    ``namespace=None`` ignores namespaces entirely; a URI requires every
    element to be in that namespace. ``lang`` fixes the object language of
    a TEI lexicon instead of reading it from the document.
    """
    mode: Literal['strict', 'lenient'] = 'strict'
    namespace: Optional[str] = None
    lang: Optional[str] = None
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        if self.mode not in ('strict', 'lenient'):
            raise ValueError(f'unknown parse mode {self.mode!r}')

    @property
    def strict(self) -> bool:
        return self.mode == 'strict'


STRICT = ParseOptions('strict')
LENIENT = ParseOptions('lenient')


class Collector:
    """Accumulates findings; in strict mode an error finding is raised."""

    def __init__(self, opts: ParseOptions):
        self.opts = opts
        self.findings = []

    def add(self, severity, code, path, message='', position=()):
        finding = Finding(Severity.parse(severity), code, path, message, tuple(position))
        if self.opts.strict and finding.severity >= ERROR:
            raise error_for(finding)
        self.findings.append(finding)
        return finding

    def extend(self, report: ValidationReport):
        for f in report:
            self.add(f.severity, f.code, f.path, f.message, f.position)

    def report(self) -> ValidationReport:
        return ValidationReport(tuple(self.findings))


def check_namespace(root, root_path: str, opts: ParseOptions, out: Collector):
    if opts.namespace is None:
        return
    stack = [(root, root_path, (0,))]
    while stack:
        elem, path, pos = stack.pop()
        if namespace(elem.tag) != opts.namespace:
            out.add(ERROR, 'NAMESPACE_MISMATCH', path,
                    f'{local(elem.tag)} is in {namespace(elem.tag)!r}, '
                    f'expected {opts.namespace!r}', pos)
            return
        stack.extend(reversed(list(children(elem, path, pos))))
